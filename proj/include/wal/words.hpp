#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wal/semiring.hpp"

namespace wal {

/// All words of length <= n over the alphabet, in shortlex order.
std::vector<Word> words_up_to(const std::string& alphabet, std::size_t n);

/// Sorts into shortlex order and removes duplicates.
std::vector<Word> shortlex_sorted(std::vector<Word> ws);

/// Suffixes of w including w itself and the empty word.
std::vector<Word> suffixes(const Word& w);
std::vector<Word> prefixes(const Word& w);
std::vector<Word> prefix_closure(const std::vector<Word>& ws);

Word reversed(Word w);

/// Comma-separated list; an empty token or "eps" is the empty word.
std::vector<Word> parse_word_list(std::string_view s);
Word parse_word(std::string_view s);

void check_word(const std::string& alphabet, const Word& w);

std::string join_words(const std::vector<Word>& ws);

}  // namespace wal
