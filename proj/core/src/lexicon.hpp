#pragma once

#include <string_view>

// Internal word lists backing the coarse tagger and sentence splitter.
namespace mrgsum::lexicon {

bool is_function_word(std::string_view lowered);
bool is_known_verb(std::string_view lowered);
bool is_known_adjective(std::string_view lowered);
bool is_abbreviation(std::string_view lowered_no_trailing_dot);

}  // namespace mrgsum::lexicon
