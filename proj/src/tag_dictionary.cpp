#include "revkano/tagger.hpp"

namespace revkano::detail {

// Frequent English words plus messenger-app vocabulary. A word listed under
// several tags keeps the last one.
const std::vector<std::pair<PosTag, std::string_view>>& embedded_tag_dictionary() {
  static const std::vector<std::pair<PosTag, std::string_view>> table = {
      {PosTag::DET, R"(
a an the this that these those every each some any no all both either neither another such
what which whose my your his her its our their thy whatever whichever enough half
)"},
      {PosTag::PRON, R"(
i me you he she it we they him them us myself yourself himself herself itself ourselves
yourselves themselves mine yours hers ours theirs someone somebody anyone anybody everyone
everybody nobody none something anything everything nothing who whom u ya ur im i'm it's
you're they're we're i've you've i'll you'll it'll i'd you'd he's she's that's there's
what's who's one ones thats its
)"},
      {PosTag::PREP, R"(
of in on at by for with without from to into onto about over under after before between
through during since until till upon across against among around behind beyond near off
via per than as within throughout toward towards despite except inside outside unlike
along beside besides beneath amid regarding concerning thru w/o
)"},
      {PosTag::ADV, R"(
very really so too also just even still always never ever again now then here there already
almost quite rather only not n't soon often sometimes usually totally completely absolutely
actually basically definitely easily quickly finally literally simply highly seriously
truly extremely constantly frequently immediately suddenly properly barely hardly nearly
mostly mainly generally especially certainly probably maybe perhaps anyway anymore anyhow
somehow otherwise instead once twice today tomorrow yesterday tonight later earlier ago
else away back forward everywhere somewhere anywhere nowhere please pls plz kindly up down
out how why where when fully entirely badly poorly nicely perfectly smoothly regularly
recently currently lately continuously automatically manually directly exactly
unfortunately hopefully thankfully honestly overall together alone
)"},
      {PosTag::OTHER, R"(
and but or nor yet plus if because while although though whereas unless whether cuz coz
bcoz bcz cause oh wow lol omg hey hi hello yes yeah yep nope ok okay hmm haha hahaha
thanks thanx thx xd etc vs
)"},
      {PosTag::VERB, R"(
is are was were be been being am isnt arent wasnt werent has have had having hasnt havent
hadnt do does did done doing dont doesnt didnt don't doesn't didn't can could will would
shall should must may might cant can't cannot couldnt couldn't wont won't wouldnt wouldn't
shouldnt shouldn't isn't aren't wasn't weren't haven't hasn't hadn't get gets got gotten
getting make makes made making use uses used using work works worked working need needs
needed want wants wanted like likes liked love loves loved hate hates hated send sends sent
sending receive receives received receiving open opens opened close closes closed install
installs installed installing uninstall uninstalled reinstall reinstalled download
downloads downloaded downloading upload uploads uploaded keep keeps kept stop stops stopped
start starts started try tries tried trying give gives gave given take takes took taken
see sees saw seen show shows showed shown know knows knew known think thinks thought say
says said go goes went gone going come comes came coming help helps helped let lets fix
fixes fixed crash crashes crashed crashing hang hangs hung load loads loaded loading play
plays played share shares shared connect connects connected delete deletes deleted block
blocks blocked add adds added remove removes removed change changes changed find finds
found look looks looked seem seems seemed feel feels felt tell tells told ask asks asked
become becomes became put puts run runs ran running lose loses lost wait waits waited
provide provides provided enjoy enjoys enjoyed recommend recommended suggest suggested
allow allows allowed enable enabled disable disabled check checks checked turn turns
turned hope hopes hoped wish wishes wished improve improves improved keeps sucks suck
sucked rocks rock deserve deserves rate rated keeping makes stuck freezing lagging hanging
trying getting buffering connecting responding opening sending receiving typing chatting
calling talking texting wasted waste wasting irritate irritates irritated annoy annoys
annoyed disappoint disappointed bother bothers bothered mean means meant understand
understood miss missed missing become hear heard read reads remember forgot
forget appear appears appeared happen happens happened talk talks talked type typed
)"},
      {PosTag::ADJ, R"(
good great awesome nice excellent amazing best better bad worst worse terrible horrible
awful poor slow fast easy simple useless buggy annoying cool fantastic wonderful perfect
smooth new old free last latest beautiful cute funny lovely happy sad fine clear boring
stupid hard difficult secure safe reliable unable able friendly useful helpful favorite
favourite many more most much few several other same different main whole full small big
large little long short high low real true own wrong right first second third next
previous recent current older newer super worth glad sure incredible frustrating
disappointing pathetic superb brilliant outstanding decent laggy unstable stable blurry
sharp clean crisp loud quiet private public personal random unknown weird strange fake
spammy expensive cheap hidden live secret silly ugly daily early lonely nasty dirty
lovely useful useless fabulous marvelous marvellous impressive horrible dreadful poor
mediocre average normal regular basic advanced fancy attractive interesting entertaining
addictive innovative unique creative colorful colourful bright dark light heavy smart
stupid dumb slowest fastest easiest simplest latest greatest nicest coolest biggest
worthless pointless hopeless helpless unresponsive inconvenient convenient annoyed
irritating excited exciting disgusting unusable broken faulty defective corrupt corrupted
able ready available unavailable important necessary possible impossible busy online
offline international local global social official paid unlimited limited instant
automatic manual mobile sure whole top minor major huge tiny extra
)"},
      {PosTag::NOUN, R"(
app apps application applications message messages messaging chat chats call calls video
videos voice feature features update updates version versions camera sticker stickers
emoji emojis emoticon emoticons group groups admin admins privacy encryption end
notification notifications status statuses theme themes profile profiles picture pictures
photo photos pic pics image images file files contact contacts friend friends family
families number numbers battery data internet connection connections network networks
wifi server servers account accounts login password screen screens home timeline story
stories news cricket game games offer offers spin spins bubble bubbles history sms text
texts bug bugs problem problems issue issues option options setting settings time times
day days week weeks month months year years people person user users thing things way
ways lot lots bit star stars rating ratings review reviews experience service services
support team developer developers keyboard link links storage memory space card cards
backup backups restart restarts freeze freezes content contents quality sound sounds
audio music filter filters wallpaper wallpapers location locations hashtag hashtags ad
ads money point points coin coins gift gifts level levels hour hours minute minutes
morning evening night wedding reply replies chatting chatroom room rooms channel channels
conf conference broadcast broadcasts media gallery document documents sticker gif gifs
beta tester testers display dp size speed lag glitch glitches error errors fault
device devices android iphone ios tablet laptop pc computer mode modes button buttons
icon icons menu menus tab tabs page pages list lists font fonts color colors colour
colours background notification ringtone ringtones tone tones alert alerts spam
security verification code codes otp sim country countries world place places city
school office job jobs life word words language languages english hindi emojis
changer sd chrome google store play playstore facebook instagram twitter whatsapp
skype viber telegram wechat messenger line kik hike snapchat samsung nokia feed feeds
post posts comment comments smiley smileys face faces selfie selfies
stranger strangers wall walls bar bars button chat-head friendlist friendship
)"},
  };
  return table;
}

}  // namespace revkano::detail
