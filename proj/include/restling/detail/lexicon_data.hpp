#pragma once

// Embedded word lists for the rule-based lemmatizer and the default
// stop-word list.

#include <string_view>
#include <utility>

namespace restling::detail {

// Irregular noun plurals, mapped to their singular.
inline constexpr std::pair<std::string_view, std::string_view> kIrregularPlurals[] = {
    {"children", "child"}, {"people", "person"}, {"men", "man"}, {"women", "woman"},
    {"feet", "foot"}, {"teeth", "tooth"}, {"geese", "goose"}, {"mice", "mouse"},
    {"lice", "louse"}, {"oxen", "ox"}, {"dice", "die"}, {"indices", "index"},
    {"matrices", "matrix"}, {"vertices", "vertex"}, {"appendices", "appendix"},
    {"analyses", "analysis"}, {"axes", "axis"}, {"bases", "basis"}, {"crises", "crisis"},
    {"diagnoses", "diagnosis"}, {"hypotheses", "hypothesis"}, {"parentheses", "parenthesis"},
    {"synopses", "synopsis"}, {"theses", "thesis"}, {"criteria", "criterion"},
    {"phenomena", "phenomenon"}, {"schemata", "schema"}, {"stimuli", "stimulus"},
    {"cacti", "cactus"}, {"fungi", "fungus"}, {"nuclei", "nucleus"}, {"radii", "radius"},
    {"syllabi", "syllabus"}, {"alumni", "alumnus"}, {"curricula", "curriculum"},
    {"memoranda", "memorandum"}, {"strata", "stratum"}, {"quanta", "quantum"},
    {"leaves", "leaf"}, {"lives", "life"}, {"knives", "knife"}, {"wives", "wife"},
    {"halves", "half"}, {"shelves", "shelf"}, {"wolves", "wolf"}, {"calves", "calf"},
    {"loaves", "loaf"}, {"thieves", "thief"}, {"selves", "self"}, {"scarves", "scarf"},
    {"elves", "elf"}, {"heroes", "hero"}, {"potatoes", "potato"}, {"tomatoes", "tomato"},
    {"echoes", "echo"}, {"vetoes", "veto"}, {"torpedoes", "torpedo"},
    {"statuses", "status"}, {"buses", "bus"}, {"viruses", "virus"}, {"campuses", "campus"},
    {"bonuses", "bonus"}, {"censuses", "census"}, {"corpuses", "corpus"}, {"corpora", "corpus"},
    {"aliases", "alias"}, {"biases", "bias"}, {"canvases", "canvas"}, {"atlases", "atlas"},
    {"gases", "gas"}, {"lenses", "lens"}, {"plusses", "plus"}, {"pluses", "plus"},
    {"quizzes", "quiz"}, {"whizzes", "whiz"}, {"shoes", "shoe"}, {"toes", "toe"},
    {"foes", "foe"}, {"hoes", "hoe"}, {"oboes", "oboe"}, {"caches", "cache"},
    {"niches", "niche"}, {"headaches", "headache"}, {"moustaches", "moustache"},
    {"movies", "movie"}, {"cookies", "cookie"}, {"zombies", "zombie"}, {"rookies", "rookie"},
    {"selfies", "selfie"}, {"hippies", "hippie"}, {"goalies", "goalie"}, {"calories", "calorie"},
    {"pixies", "pixie"}, {"brownies", "brownie"}, {"lingeries", "lingerie"},
};

// Forms the suffix rules would damage, plus irregular verb forms.
inline constexpr std::pair<std::string_view, std::string_view> kLemmaExceptions[] = {
    {"settings", "setting"}, {"setting", "setting"}, {"things", "thing"}, {"thing", "thing"},
    {"strings", "string"}, {"string", "string"}, {"buildings", "building"},
    {"building", "building"}, {"meetings", "meeting"}, {"meeting", "meeting"},
    {"pricing", "pricing"}, {"billing", "billing"}, {"ceiling", "ceiling"},
    {"ceilings", "ceiling"}, {"morning", "morning"}, {"evening", "evening"},
    {"warning", "warning"}, {"warnings", "warning"}, {"ring", "ring"}, {"rings", "ring"},
    {"king", "king"}, {"wing", "wing"}, {"during", "during"}, {"nothing", "nothing"},
    {"something", "something"}, {"anything", "anything"}, {"everything", "everything"},
    {"bed", "bed"}, {"red", "red"}, {"shed", "shed"}, {"need", "need"}, {"feed", "feed"},
    {"speed", "speed"}, {"seed", "seed"}, {"embed", "embed"}, {"hundred", "hundred"},
    {"led", "led"}, {"leds", "led"}, {"ted", "ted"},
    // irregular verb forms
    {"is", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"}, {"been", "be"},
    {"being", "be"}, {"am", "be"}, {"has", "have"}, {"had", "have"}, {"having", "have"},
    {"does", "do"}, {"did", "do"}, {"done", "do"}, {"doing", "do"},
    {"got", "get"}, {"gotten", "get"}, {"getting", "get"}, {"gets", "get"},
    {"made", "make"}, {"making", "make"}, {"built", "build"}, {"found", "find"},
    {"sent", "send"}, {"went", "go"}, {"gone", "go"}, {"goes", "go"}, {"came", "come"},
    {"took", "take"}, {"taken", "take"}, {"gave", "give"}, {"given", "give"},
    {"knew", "know"}, {"known", "know"}, {"saw", "see"}, {"seen", "see"},
    {"shown", "show"}, {"showed", "show"}, {"wrote", "write"}, {"written", "write"},
    {"ran", "run"}, {"began", "begin"}, {"begun", "begin"},
    {"chose", "choose"}, {"chosen", "choose"}, {"held", "hold"}, {"kept", "keep"},
    {"left", "leave"}, {"lost", "lose"}, {"meant", "mean"}, {"paid", "pay"},
    {"read", "read"}, {"said", "say"}, {"sold", "sell"}, {"spent", "spend"},
    {"stood", "stand"}, {"told", "tell"}, {"thought", "think"}, {"brought", "bring"},
    {"bought", "buy"}, {"caught", "catch"}, {"taught", "teach"}, {"sought", "seek"},
    {"understood", "understand"}, {"broke", "break"}, {"broken", "break"},
    {"drove", "drive"}, {"driven", "drive"}, {"forgot", "forget"}, {"forgotten", "forget"},
    {"froze", "freeze"}, {"frozen", "freeze"}, {"hid", "hide"}, {"hidden", "hide"},
    {"rode", "ride"}, {"ridden", "ride"}, {"rose", "rise"}, {"risen", "rise"},
    {"spoke", "speak"}, {"spoken", "speak"}, {"stole", "steal"}, {"stolen", "steal"},
    {"woke", "wake"}, {"woken", "wake"}, {"wore", "wear"}, {"worn", "wear"},
    {"won", "win"}, {"fed", "feed"}, {"fled", "flee"}, {"bled", "bleed"}, {"bred", "breed"},
    {"slid", "slide"}, {"struck", "strike"}, {"stuck", "stick"}, {"hung", "hang"},
    {"dug", "dig"}, {"lent", "lend"}, {"bent", "bend"}, {"dealt", "deal"},
    {"felt", "feel"}, {"fell", "fall"}, {"fallen", "fall"}, {"grew", "grow"},
    {"grown", "grow"}, {"threw", "throw"}, {"thrown", "throw"}, {"blew", "blow"},
    {"blown", "blow"}, {"drew", "draw"}, {"drawn", "draw"}, {"flew", "fly"},
    {"flown", "fly"}, {"lay", "lie"}, {"lain", "lie"}, {"heard", "hear"},
    {"sat", "sit"}, {"slept", "sleep"}, {"swept", "sweep"}, {"wept", "weep"},
    {"bound", "bind"}, {"wound", "wind"}, {"ground", "ground"},
    {"bit", "bit"}, {"bitten", "bite"}, {"uploaded", "upload"}, {"downloaded", "download"},
};

// Nouns whose singular and plural coincide, or that are not counted.
inline constexpr std::string_view kUncountable[] = {
    "data", "metadata", "media", "multimedia", "status", "info", "information", "news",
    "series", "species", "equipment", "software", "firmware", "hardware", "middleware",
    "feedback", "access", "analytics", "physics", "mathematics", "economics", "statistics",
    "logistics", "electronics", "aircraft", "sheep", "fish", "deer", "moose", "bison",
    "traffic", "weather", "advice", "knowledge", "research", "evidence", "furniture",
    "luggage", "baggage", "mail", "email", "music", "rice", "money", "content", "progress",
    "wildlife", "bass", "glass", "address", "process", "class", "pass", "boss", "loss",
    "business", "wireless", "success", "less", "ess", "chassis", "thesis", "analysis",
    "basis", "axis", "crisis", "diagnosis", "synopsis", "bus", "gas", "bias", "alias",
    "canvas", "atlas", "lens", "plus", "minus", "bonus", "census", "corpus", "virus",
    "campus", "radius", "focus", "consensus", "apparatus", "hiatus", "prospectus",
    "this", "his", "its", "yes", "us", "as", "is", "was", "has", "does", "thus", "always",
    "perhaps", "whereas", "besides", "sometimes", "afterwards", "towards", "upwards",
    "downwards", "across", "unless", "nevertheless", "regardless", "wireless", "ios",
    "kudos", "ethos", "chaos", "cosmos", "pathos", "iris", "tennis", "dns", "https",
    "http", "aws", "sms", "gps", "ms", "os", "ssl", "tls", "sss", "hiss", "kiss",
    "stress", "dress", "express", "compress", "progress", "congress", "mass", "grass",
};

// Base forms used to validate -ed/-ing stripping. A verb suffix is removed
// only when the resulting stem is listed here.
inline constexpr std::string_view kKnownVerbs[] = {
    "accept", "access", "activate", "add", "adjust", "allow", "append", "apply",
    "approve", "archive", "assign", "attach", "authenticate", "authorize", "backup",
    "block", "book", "browse", "build", "calculate", "call", "cancel", "change", "charge",
    "check", "claim", "clear", "click", "clone", "close", "collect", "commit", "compare",
    "complete", "compute", "configure", "confirm", "connect", "contain", "control", "convert",
    "copy", "count", "create", "deactivate", "decline", "decode", "decrypt", "define",
    "delete", "deliver", "deny", "deploy", "describe", "destroy", "detach", "detect",
    "determine", "disable", "disconnect", "discover", "dismiss", "display", "download",
    "drop", "duplicate", "edit", "enable", "encode", "encrypt", "end", "enroll", "ensure",
    "enter", "erase", "estimate", "evaluate", "exchange", "execute", "exist", "expand",
    "expire", "export", "extend", "fail", "fetch", "filter", "find", "finish", "fire",
    "flag", "follow", "force", "format", "forward", "generate", "get", "grant", "group",
    "handle", "hide", "identify", "ignore", "import", "include", "increase", "index",
    "initialize", "insert", "install", "invite", "invoke", "issue", "join", "keep",
    "label", "launch", "leave", "limit", "link", "list", "load", "locate", "lock",
    "log", "login", "logout", "look", "manage", "map", "mark", "match", "merge",
    "migrate", "modify", "monitor", "mount", "move", "mute", "name", "need", "notify",
    "obtain", "open", "order", "own", "paginate", "pair", "parse", "patch", "pause",
    "perform", "permit", "ping", "place", "play", "poll", "populate", "post", "prepare",
    "preview", "print", "process", "produce", "provide", "provision", "publish", "pull",
    "purge", "push", "query", "queue", "read", "reboot", "receive", "record", "redirect",
    "refresh", "register", "reject", "relate", "release", "reload", "remove", "rename",
    "render", "reorder", "replace", "reply", "report", "request", "require", "reset",
    "resolve", "restart", "restore", "resume", "retrieve", "return", "revoke", "rotate",
    "run", "save", "scan", "schedule", "search", "select", "send", "set", "setup",
    "share", "show", "sign", "skip", "sort", "specify", "start", "stop", "store",
    "stream", "submit", "subscribe", "support", "suspend", "switch", "sync", "tag",
    "test", "toggle", "track", "train", "transfer", "transform", "trigger", "turn",
    "unlink", "unlock", "unpair", "unregister", "unsubscribe", "update", "upgrade",
    "upload", "use", "validate", "verify", "view", "wait", "watch", "write",
};

// Function words only; content verbs (get, set, show, new, ...) are deliberately
// absent because the CRUD lexicon depends on them.
inline constexpr std::string_view kDefaultStopWords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
    "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing", "down",
    "during", "each", "either", "etc", "few", "for", "from", "further", "had", "has",
    "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
    "how", "however", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
    "may", "me", "might", "more", "most", "must", "my", "myself", "neither", "no", "nor",
    "not", "of", "off", "on", "once", "only", "or", "other", "ought", "our", "ours",
    "ourselves", "out", "over", "own", "same", "shall", "she", "should", "so", "some",
    "such", "than", "that", "the", "their", "theirs", "them", "themselves", "then",
    "there", "these", "they", "this", "those", "through", "thus", "to", "too", "under",
    "until", "up", "upon", "us", "very", "via", "was", "we", "were", "what", "when",
    "where", "whether", "which", "while", "who", "whom", "whose", "why", "will", "with",
    "within", "without", "would", "yet", "you", "your", "yours", "yourself", "yourselves",
    "e", "g", "ie", "eg",
};

}  // namespace restling::detail
