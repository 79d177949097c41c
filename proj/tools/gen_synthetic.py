#!/usr/bin/env python3
"""Generate the bundled synthetic review corpus under data/synthetic/.

Five fictional messenger apps, roughly 500 reviews, ten planted aspects with a
known sentiment skew. Output is deterministic for a given --seed.
"""
import argparse
import csv
import json
import random
from pathlib import Path

ENTITIES = ["chirp", "hollr", "palaver", "quill", "wavelet"]

# (words, skew, extra noun phrases that share a word with the aspect)
PLANTED = [
    ("video call", "positive", []),
    ("sticker", "positive", ["sticker pack"]),
    ("group chat", "positive", []),
    ("theme", "positive", ["dark theme"]),
    ("end to end encryption", "positive", []),
    ("update", "negative", ["latest update"]),
    ("notification", "negative", ["notification sound"]),
    ("battery", "negative", ["battery life"]),
    ("voice message", "negative", []),
    ("login screen", "negative", []),
]

POSITIVE = [
    "The {a} is great.",
    "I love the {a}!",
    "Really good {a}, works perfectly.",
    "The new {a} is awesome and fast.",
    "{A} is amazing, thanks for this.",
    "Best {a} I have seen so far.",
    "The {a} is smooth and reliable.",
]
NEGATIVE = [
    "The {a} is terrible.",
    "I hate the {a}.",
    "The {a} is slow and buggy.",
    "{A} keeps failing, so annoying.",
    "Worst {a} ever, total waste.",
    "The {a} is broken again.",
    "Fix the {a}, it is useless.",
]
FILLER = [
    "I use it every day.",
    "My friends use it too.",
    "Downloaded it last week.",
    "Five stars from me.",
    "It is okay I guess.",
    "Please add more options.",
    "Using it on my old phone.",
]


def sentence(rng, aspect, polarity):
    pool = POSITIVE if polarity > 0 else NEGATIVE
    t = rng.choice(pool)
    return t.format(a=aspect, A=aspect[0].upper() + aspect[1:])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "synthetic"))
    ap.add_argument("--seed", type=int, default=20170512)
    ap.add_argument("--reviews-per-entity", type=int, default=100)
    ap.add_argument("--subjects", type=int, default=31)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    # Not every app offers every feature; gold.csv records which ones do.
    offered = {}
    for i, (words, _, _) in enumerate(PLANTED):
        offered[words] = [e for j, e in enumerate(ENTITIES) if (i + j) % 5 != 4]

    lines = []
    for e in ENTITIES:
        features = [p for p in PLANTED if e in offered[p[0]]]
        for r in range(args.reviews_per_entity):
            parts = []
            for _ in range(rng.randint(1, 2)):
                words, skew, extras = rng.choice(features)
                agree = rng.random() < 0.8
                polarity = (1 if skew == "positive" else -1) * (1 if agree else -1)
                name = rng.choice(extras) if extras and rng.random() < 0.2 else words
                parts.append(sentence(rng, name, polarity))
            if rng.random() < 0.5:
                parts.append(rng.choice(FILLER))
            rng.shuffle(parts)
            review = {"entity": e, "review_id": f"{e}-{r:04d}", "text": " ".join(parts)}
            if rng.random() < 0.7:
                review["rating"] = rng.randint(1, 5)
            lines.append(json.dumps(review, sort_keys=True))
    (out / "reviews.jsonl").write_text("\n".join(lines) + "\n")

    planted = [{"words": w.split(), "skew": s} for w, s, _ in PLANTED]
    (out / "planted.json").write_text(json.dumps(planted, indent=2) + "\n")

    categories = [
        {"category_id": w.replace(" ", "_"), "label": w, "members": [w.split()]} for w, _, _ in PLANTED
    ]
    (out / "categories.json").write_text(json.dumps(categories, indent=2) + "\n")

    buckets = ["must_have", "one_dimensional", "delighter", "indifferent", "reverse"]
    with open(out / "votes.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["subject_id", "category_id", "bucket"])
        for s in range(args.subjects):
            for i, c in enumerate(categories):
                favourite = buckets[i % 4]
                bucket = favourite if rng.random() < 0.6 else rng.choice(buckets)
                w.writerow([f"s{s:02d}", c["category_id"], bucket])

    with open(out / "gold.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "aliases", "entities"])
        for words, _, _ in PLANTED:
            w.writerow([words.title(), "", "|".join(offered[words])])
        w.writerow(["Photo Editing", "", "quill|wavelet"])
        w.writerow(["Stories", "story", "chirp|hollr"])


if __name__ == "__main__":
    main()
