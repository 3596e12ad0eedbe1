#include "linkbound/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace linkbound {
namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  if (s.size() > 9) return false;
  out = std::atoi(s.c_str());
  return true;
}

// "s3", "s3^-1", "S3^{-1}", "3", "-3".
bool parse_letter(std::string tok, int& out) {
  if (parse_int(tok, out)) return out != 0;
  if (tok.empty() || (tok[0] != 's' && tok[0] != 'S')) return false;
  tok.erase(0, 1);
  int exponent = 1;
  auto caret = tok.find('^');
  if (caret != std::string::npos) {
    std::string e = tok.substr(caret + 1);
    tok.erase(caret);
    if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
    if (!parse_int(e, exponent) || (exponent != 1 && exponent != -1)) return false;
  }
  int index = 0;
  if (!parse_int(tok, index) || index <= 0 || tok[0] == '-' || tok[0] == '+') return false;
  out = index * exponent;
  return true;
}

}  // namespace

void BraidWord::validate() const {
  if (strands < 1) throw std::invalid_argument("braid: strands must be at least 1");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1) {
      throw std::invalid_argument("braid: generator index " + std::to_string(std::abs(l)) +
                                  " out of range for " + std::to_string(strands) + " strands");
    }
  }
}

BraidWord parse_braid(const std::string& text) {
  BraidWord b;
  std::size_t semi = text.find(';');
  std::string head = semi == std::string::npos ? std::string() : text.substr(0, semi);
  std::size_t body_start = semi == std::string::npos ? 0 : semi + 1;

  // Header "strands=N".
  {
    std::string h;
    for (char c : head) {
      if (!std::isspace(static_cast<unsigned char>(c))) h += c;
    }
    const std::string key = "strands=";
    if (h.rfind(key, 0) != 0) {
      throw ParseError("braid: expected 'strands=<n>;' header", 1, 1);
    }
    if (!parse_int(h.substr(key.size()), b.strands) || b.strands < 1) {
      throw ParseError("braid: strands must be a positive integer", 1,
                       static_cast<int>(head.find('=') + 2));
    }
  }

  // Tokens with their columns, for diagnostics.
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < body_start; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::size_t i = body_start;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++column;
      ++i;
      continue;
    }
    int start_col = column;
    std::string tok;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') {
      tok += text[i];
      ++i;
      ++column;
    }
    int letter = 0;
    if (!parse_letter(tok, letter)) {
      throw ParseError("braid: malformed token '" + tok + "'", line, start_col);
    }
    if (std::abs(letter) > b.strands - 1) {
      throw ParseError("braid: generator index " + std::to_string(std::abs(letter)) +
                           " out of range for " + std::to_string(b.strands) + " strands",
                       line, start_col);
    }
    b.letters.push_back(letter);
  }
  return b;
}

std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  os << "strands=" << b.strands << ";";
  for (int l : b.letters) os << ' ' << l;
  return os.str();
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("torus_braid: p and q must be at least 2");
  BraidWord b;
  b.strands = p;
  for (int k = 0; k < q; ++k) {
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  }
  return b;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  b.validate();
  // position -> strand currently there; the closure connects the end at
  // position j back to the start at position j.
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters) {
    auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
  }
  return cycles;
}

}  // namespace linkbound
