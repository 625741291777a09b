#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "mrgsum/corpus.hpp"

namespace mrgsum {
namespace {

// Fixed English stopword list (SMART-style, trimmed to the common core).
const std::unordered_set<std::string_view>& stopword_set() {
  static const std::unordered_set<std::string_view> words = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
      "any", "are", "aren't", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "cannot", "could", "couldn't", "did", "didn't",
      "do", "does", "doesn't", "doing", "don't", "down", "during", "each", "few", "for",
      "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't", "having", "he",
      "he'd", "he'll", "he's", "her", "here", "here's", "hers", "herself", "him", "himself",
      "his", "how", "how's", "i", "i'd", "i'll", "i'm", "i've", "if", "in", "into", "is",
      "isn't", "it", "it's", "its", "itself", "let's", "me", "more", "most", "mustn't", "my",
      "myself", "no", "nor", "not", "of", "off", "on", "once", "only", "or", "other", "ought",
      "our", "ours", "ourselves", "out", "over", "own", "same", "shan't", "she", "she'd",
      "she'll", "she's", "should", "shouldn't", "so", "some", "such", "than", "that",
      "that's", "the", "their", "theirs", "them", "themselves", "then", "there", "there's",
      "these", "they", "they'd", "they'll", "they're", "they've", "this", "those", "through",
      "to", "too", "under", "until", "up", "very", "was", "wasn't", "we", "we'd", "we'll",
      "we're", "we've", "were", "weren't", "what", "what's", "when", "when's", "where",
      "where's", "which", "while", "who", "who's", "whom", "why", "why's", "will", "with",
      "won't", "would", "wouldn't", "you", "you'd", "you'll", "you're", "you've", "your",
      "yours", "yourself", "yourselves",
  };
  return words;
}

const std::unordered_set<std::string_view>& marker_set() {
  static const std::unordered_set<std::string_view> words = {
      "however", "moreover", "therefore", "but", "also", "meanwhile", "furthermore",
      "nevertheless", "nonetheless", "consequently", "thus", "instead", "additionally",
      "besides", "still", "yet", "otherwise", "accordingly",
  };
  return words;
}

const std::unordered_set<std::string_view>& pronoun_set() {
  static const std::unordered_set<std::string_view> words = {
      "he", "she", "it", "they", "this", "these", "those",
  };
  return words;
}

}  // namespace

bool is_stopword(std::string_view lowered) { return stopword_set().count(lowered) > 0; }

bool is_discourse_marker(std::string_view lowered) { return marker_set().count(lowered) > 0; }

bool is_leading_pronoun(std::string_view lowered) { return pronoun_set().count(lowered) > 0; }

namespace lexicon {

// Function words beyond the stopword list that the tagger folds into Func.
bool is_function_word(std::string_view w) {
  static const std::unordered_set<std::string_view> words = {
      "the", "a", "an", "and", "or", "but", "nor", "so", "yet", "for", "of", "in", "on",
      "at", "by", "to", "from", "with", "without", "within", "into", "onto", "upon",
      "about", "above", "across", "after", "against", "along", "among", "around",
      "before", "behind", "below", "beneath", "beside", "between", "beyond", "despite",
      "during", "except", "inside", "near", "outside", "over", "past", "since", "through",
      "throughout", "toward", "towards", "under", "underneath", "until", "up", "down",
      "via", "that", "which", "who", "whom", "whose", "what", "when", "where", "why",
      "how", "if", "unless", "while", "whereas", "because", "although", "though", "than",
      "as", "per", "not", "no", "this", "these", "those", "it", "its", "he", "she", "they",
      "them", "his", "her", "their", "theirs", "we", "us", "our", "ours", "you", "your",
      "yours", "i", "me", "my", "mine", "him", "all", "any", "both", "each", "either",
      "neither", "few", "many", "much", "more", "most", "other", "some", "several", "such",
      "only", "own", "same", "too", "very", "there", "here", "then", "once", "every",
  };
  return words.count(w) > 0;
}

// Irregular and high-frequency verb forms the suffix rules cannot catch.
bool is_known_verb(std::string_view w) {
  static const std::unordered_set<std::string_view> words = {
      "is", "am", "are", "was", "were", "be", "been", "being", "has", "have", "had",
      "having", "do", "does", "did", "done", "will", "would", "can", "could", "shall",
      "should", "may", "might", "must", "say", "says", "said", "make", "makes", "made",
      "go", "goes", "went", "gone", "take", "takes", "took", "taken", "come", "comes",
      "came", "see", "sees", "saw", "seen", "know", "knows", "knew", "known", "get",
      "gets", "got", "gotten", "give", "gives", "gave", "given", "find", "finds", "found",
      "think", "thinks", "thought", "tell", "tells", "told", "become", "becomes",
      "became", "show", "shows", "showed", "shown", "leave", "leaves", "left", "feel",
      "feels", "felt", "put", "puts", "bring", "brings", "brought", "begin", "begins",
      "began", "begun", "keep", "keeps", "kept", "hold", "holds", "held", "write",
      "writes", "wrote", "written", "stand", "stands", "stood", "hear", "hears", "heard",
      "let", "lets", "mean", "means", "meant", "set", "sets", "meet", "meets", "met",
      "run", "runs", "ran", "pay", "pays", "paid", "sit", "sits", "sat", "speak",
      "speaks", "spoke", "spoken", "lie", "lies", "lay", "lain", "lead", "leads", "led",
      "read", "reads", "grow", "grows", "grew", "grown", "lose", "loses", "lost", "fall",
      "falls", "fell", "fallen", "send", "sends", "sent", "build", "builds", "built",
      "understand", "understands", "understood", "draw", "draws", "drew", "drawn",
      "break", "breaks", "broke", "broken", "spend", "spends", "spent", "cut", "cuts",
      "rise", "rises", "rose", "risen", "drive", "drives", "drove", "driven", "buy",
      "buys", "bought", "wear", "wears", "wore", "worn", "choose", "chooses", "chose",
      "chosen", "strike", "strikes", "struck", "shake", "shakes", "shook", "shaken",
      "hit", "hits", "win", "wins", "won", "sleep", "sleeps", "slept", "catch", "catches",
      "caught", "teach",
      "teaches", "taught", "fight", "fights", "fought", "seek", "seeks", "sought",
      "sell", "sells", "sold", "throw", "throws", "threw", "thrown", "fly", "flies",
      "flew", "flown", "swept", "sweep", "sweeps", "remain", "remains", "report",
      "reports", "struck", "kill", "kills", "cause", "causes", "occur", "occurs",
  };
  return words.count(w) > 0;
}

// High-frequency adjectives that carry no reliable suffix.
bool is_known_adjective(std::string_view w) {
  static const std::unordered_set<std::string_view> words = {
      "new", "old", "big", "small", "large", "little", "long", "short", "high", "low",
      "good", "bad", "great", "major", "minor", "strong", "weak", "early", "late", "young",
      "local", "national", "federal", "public", "private", "recent", "severe", "heavy",
      "light", "hot", "cold", "deep", "wide", "narrow", "near", "far", "fast", "slow",
      "rich", "poor", "hard", "soft", "dark", "bright", "clear", "safe", "dead", "top",
      "main", "key", "real", "full", "empty", "free", "busy", "quiet", "loud", "huge",
      "tiny", "broad", "prime", "senior", "junior", "chief", "due", "likely", "aware",
      "red", "blue", "green", "black", "white", "grey", "brown", "next", "last", "first",
  };
  return words.count(w) > 0;
}

bool is_abbreviation(std::string_view w) {
  static const std::unordered_set<std::string_view> words = {
      "dr", "mr", "mrs", "ms", "prof", "st", "jr", "sr", "vs", "etc", "inc", "ltd", "co",
      "corp", "gen", "gov", "sen", "rep", "rev", "hon", "capt", "sgt", "col", "lt", "cmdr",
      "maj", "adm", "no", "nos", "fig", "figs", "vol", "dept", "est", "approx", "min",
      "max", "mt", "ft", "ave", "blvd", "rd", "jan", "feb", "mar", "apr", "jun", "jul",
      "aug", "sep", "sept", "oct", "nov", "dec", "mon", "tue", "wed", "thu", "fri",
      "e.g", "i.e", "a.m", "p.m", "u.s", "u.k", "u.n", "d.c", "ph.d", "b.c", "a.d",
  };
  return words.count(w) > 0;
}

}  // namespace lexicon
}  // namespace mrgsum
