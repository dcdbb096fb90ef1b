#include "wal/words.hpp"

#include <algorithm>

namespace wal {

std::vector<Word> words_up_to(const std::string& alphabet, std::size_t n) {
  std::string letters = alphabet;
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out{Word{}};
  std::size_t layer_start = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (char c : letters) out.push_back(out[i] + c);
    layer_start = layer_end;
  }
  return out;
}

std::vector<Word> shortlex_sorted(std::vector<Word> ws) { return canonical_words(std::move(ws)); }

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(w.substr(i));
  return shortlex_sorted(std::move(out));
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(w.substr(0, i));
  return out;
}

std::vector<Word> prefix_closure(const std::vector<Word>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws)
    for (auto& p : prefixes(w)) out.push_back(std::move(p));
  return shortlex_sorted(std::move(out));
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word parse_word(std::string_view s) {
  if (s == "eps") return {};
  return Word(s);
}

std::vector<Word> parse_word_list(std::string_view s) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (true) {
    std::size_t j = s.find(',', i);
    std::string_view tok = s.substr(i, j == std::string_view::npos ? s.npos : j - i);
    out.push_back(parse_word(tok));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return shortlex_sorted(std::move(out));
}

void check_word(const std::string& alphabet, const Word& w) {
  for (char c : w)
    if (alphabet.find(c) == std::string::npos)
      throw DomainError(std::string("unknown letter '") + c + "'");
}

std::string join_words(const std::vector<Word>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ",";
    out += render_word(ws[i]);
  }
  return out;
}

}  // namespace wal
