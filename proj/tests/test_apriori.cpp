#include <set>
#include <random>

#include "doctest.h"
#include "oracle/apriori_oracle.hpp"
#include "revkano/apriori.hpp"
#include "revkano/text_util.hpp"

using namespace revkano;

namespace {

std::vector<Transaction> random_transactions(std::mt19937& rng, int max_items, int max_tx) {
  std::uniform_int_distribution<int> ntx(0, max_tx);
  std::uniform_int_distribution<int> width(1, max_items);
  std::uniform_int_distribution<int> item(0, max_items - 1);
  std::vector<Transaction> txs(ntx(rng));
  for (auto& t : txs) {
    std::set<std::string> s;
    int w = width(rng);
    for (int i = 0; i < w; ++i) s.insert(std::string(1, static_cast<char>('a' + item(rng))));
    t.items.assign(s.begin(), s.end());
  }
  return txs;
}

}  // namespace

TEST_CASE("mine_frequent: hand example") {
  std::vector<Transaction> txs{{{"a", "b"}}, {{"a", "b"}}, {{"a", "c"}}};
  auto f = mine_frequent(txs, 0.5);
  REQUIRE(f.sets().size() == 3);
  CHECK(f.sets()[0].items == std::vector<std::string>{"a"});
  CHECK(f.sets()[0].support == 1.0);
  CHECK(f.sets()[1].items == std::vector<std::string>{"b"});
  CHECK(f.sets()[1].support == doctest::Approx(2.0 / 3.0));
  CHECK(f.sets()[2].items == std::vector<std::string>{"a", "b"});
  CHECK(f.sets()[2].support_count == 2);
  CHECK(f.find({"c"}) == nullptr);
}

TEST_CASE("mine_frequent: edge cases") {
  CHECK(mine_frequent({}, 0.1).sets().empty());
  CHECK_THROWS_AS(mine_frequent({}, 0.0), ConfigError);
  CHECK_THROWS_AS(mine_frequent({}, 1.5), ConfigError);
  CHECK_NOTHROW(mine_frequent({}, 1.0));
}

TEST_CASE("generate_rules: hand examples") {
  std::vector<Transaction> txs{{{"a", "b"}}, {{"a", "b"}}, {{"a", "c"}}};
  auto rules = generate_rules(mine_frequent(txs, 0.5), 0.6);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].antecedent == std::vector<std::string>{"a"});
  CHECK(rules[0].consequent == std::vector<std::string>{"b"});
  CHECK(rules[0].confidence == doctest::Approx(2.0 / 3.0));
  CHECK(rules[1].antecedent == std::vector<std::string>{"b"});
  CHECK(rules[1].confidence == 1.0);

  CHECK(generate_rules(mine_frequent(txs, 0.5), 1.0).size() == 1);  // only b -> a is perfect
  std::vector<Transaction> none{{{"a", "b"}}, {{"a"}}, {{"b"}}};
  CHECK(generate_rules(mine_frequent(none, 0.3), 1.0).empty());
}

TEST_CASE("serial and OpenMP support counting agree") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    auto txs = random_transactions(rng, 10, 200);
    auto db = kernels::encode(txs);
    std::vector<kernels::Itemset> level;
    for (kernels::ItemId i = 0; i < db.vocabulary.size(); ++i) level.push_back({i});
    for (int k = 2; k <= 4; ++k) {
      auto cands = kernels::generate_candidates(level);
      if (cands.empty()) break;
      auto serial = kernels::count_support_serial(db, cands);
      CHECK(serial == kernels::count_support_omp(db, cands, 1));
      CHECK(serial == kernels::count_support_omp(db, cands, 4));
      level = cands;
    }
  }
}

TEST_CASE("generate_candidates prunes sets with an infrequent subset") {
  // {0,1},{0,2} join to {0,1,2}, but {1,2} is not frequent.
  auto c = kernels::generate_candidates({{0, 1}, {0, 2}});
  CHECK(c.empty());
  auto d = kernels::generate_candidates({{0, 1}, {0, 2}, {1, 2}});
  CHECK(d == std::vector<kernels::Itemset>{{0, 1, 2}});
}

TEST_CASE("oracle equivalence, downward closure, monotonicity") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> sup(0.02, 0.6);
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  for (int iter = 0; iter < 40; ++iter) {
    auto txs = random_transactions(rng, 8, 64);
    double s = sup(rng);
    double c = conf(rng);
    MiningOptions opts;
    opts.min_support = s;
    opts.jobs = iter % 2 ? 1 : 3;
    auto f = mine_frequent(txs, opts);
    auto brute = oracle::brute_frequent(txs, s);
    REQUIRE(f.sets().size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(f.sets()[i].items == brute[i].items);
      CHECK(f.sets()[i].support_count == brute[i].count);
    }
    for (const auto& set : f.sets()) {
      for (std::size_t drop = 0; drop < set.items.size() && set.items.size() > 1; ++drop) {
        auto sub = set.items;
        sub.erase(sub.begin() + static_cast<long>(drop));
        CHECK(f.find(sub) != nullptr);
      }
    }
    auto higher = mine_frequent(txs, std::min(1.0, s + 0.1));
    for (const auto& set : higher.sets()) CHECK(f.find(set.items) != nullptr);

    auto rules = generate_rules(f, c);
    auto brute_rules = oracle::brute_rules(brute, c);
    REQUIRE(rules.size() == brute_rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
      CHECK(rules[i].antecedent == brute_rules[i].lhs);
      CHECK(rules[i].consequent == brute_rules[i].rhs);
      CHECK(rules[i].confidence == brute_rules[i].confidence);
    }
  }
}
