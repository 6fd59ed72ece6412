#include "braidnorm/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidnorm {

void validate(const GroupSignature& sig) {
  if (sig.n_strands < 1) throw std::invalid_argument("n_strands must be >= 1");
  if (sig.genus < 0) throw std::invalid_argument("genus must be >= 0");
  if (sig.punctures < 1) throw std::invalid_argument("punctures must be >= 1");
  if (sig.contractible() < 1)
    throw std::invalid_argument("n_strands must exceed genus");
}

namespace {

void validate_letter(const Letter& l, const GroupSignature& sig, AlphabetMode mode) {
  if (l.exponent == 0) throw std::invalid_argument("letter exponent must be nonzero");
  if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
  const int k = sig.contractible();
  switch (l.kind) {
    case LetterKind::Sigma: {
      const int max = (mode == AlphabetMode::Restricted) ? k - 1 : sig.n_strands - 1;
      if (l.index > max) {
        std::ostringstream os;
        os << "sigma index must be <= " << max;
        throw std::invalid_argument(os.str());
      }
      break;
    }
    case LetterKind::B:
      if (mode == AlphabetMode::Restricted)
        throw std::invalid_argument("letter b is not in the restricted alphabet");
      [[fallthrough]];
    case LetterKind::A:
    case LetterKind::C:
      if (l.index > sig.genus) {
        std::ostringstream os;
        os << static_cast<char>(l.kind) << " index must be <= " << sig.genus;
        throw std::invalid_argument(os.str());
      }
      break;
    case LetterKind::Z:
      if (l.index > sig.punctures - 1) {
        std::ostringstream os;
        os << "z index must be <= " << sig.punctures - 1;
        throw std::invalid_argument(os.str());
      }
      break;
  }
}

void validate_word(const BraidWord& w) {
  validate(w.signature);
  for (const Letter& l : w.letters) validate_letter(l, w.signature, w.mode);
}

}  // namespace

ExponentSummary operator+(const ExponentSummary& x, const ExponentSummary& y) {
  if (x.k.size() != y.k.size())
    throw std::invalid_argument("summaries have different puncture counts");
  ExponentSummary r;
  r.k_gen = x.k_gen + y.k_gen;
  r.k_sigma = x.k_sigma + y.k_sigma;
  r.k.resize(x.k.size());
  for (std::size_t j = 0; j < x.k.size(); ++j) r.k[j] = x.k[j] + y.k[j];
  return r;
}

ExponentSummary operator-(const ExponentSummary& x) {
  ExponentSummary r;
  r.k_gen = -x.k_gen;
  r.k_sigma = -x.k_sigma;
  r.k.resize(x.k.size());
  for (std::size_t j = 0; j < x.k.size(); ++j) r.k[j] = -x.k[j];
  return r;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what), position_(position) {}

namespace {

[[noreturn]] void parse_fail(const std::string& msg, std::size_t pos) {
  std::ostringstream os;
  os << msg << " at offset " << pos;
  throw ParseError(os.str(), pos);
}

}  // namespace

BraidWord parse_word(const std::string& text, const GroupSignature& sig,
                     AlphabetMode mode) {
  validate(sig);
  BraidWord word{sig, mode, {}};
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char base = text[i];
    LetterKind kind;
    switch (base) {
      case 's': kind = LetterKind::Sigma; break;
      case 'a': kind = LetterKind::A; break;
      case 'b': kind = LetterKind::B; break;
      case 'c': kind = LetterKind::C; break;
      case 'z': kind = LetterKind::Z; break;
      default: parse_fail(std::string("unexpected character '") + base + "'", i);
    }
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      parse_fail("expected generator index", i);
    long index = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > 1'000'000) parse_fail("generator index out of range", start);
      ++i;
    }
    if (index < 1) parse_fail("generator index must be positive", start);
    long long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = (text[i] == '-');
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        parse_fail("expected exponent", i);
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1'000'000'000) parse_fail("exponent out of range", start);
        ++i;
      }
      if (mag == 0) parse_fail("exponent must be nonzero", start);
      exponent = negative ? -mag : mag;
    }
    Letter letter{kind, static_cast<int>(index), exponent};
    try {
      validate_letter(letter, sig, mode);
    } catch (const std::invalid_argument& e) {
      parse_fail(e.what(), start);
    }
    word.letters.push_back(letter);
  }
  return word;
}

std::string format_word(const BraidWord& word) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : word.letters) {
    if (!first) os << ' ';
    first = false;
    os << static_cast<char>(l.kind) << l.index;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

BraidWord free_reduce(const BraidWord& word) {
  BraidWord out{word.signature, word.mode, {}};
  for (const Letter& l : word.letters) {
    if (!out.letters.empty()) {
      Letter& top = out.letters.back();
      if (top.kind == l.kind && top.index == l.index) {
        top.exponent += l.exponent;
        if (top.exponent == 0) out.letters.pop_back();
        continue;
      }
    }
    out.letters.push_back(l);
  }
  return out;
}

BraidWord expand_restricted(const BraidWord& word) {
  validate_word(word);
  if (word.mode != AlphabetMode::Restricted)
    throw std::invalid_argument("word is not in restricted mode");
  BraidWord out{word.signature, AlphabetMode::Full, {}};
  for (const Letter& l : word.letters) {
    if (l.kind == LetterKind::C) {
      out.letters.push_back({LetterKind::B, l.index, -1});
      out.letters.push_back({LetterKind::A, l.index, l.exponent});
      out.letters.push_back({LetterKind::B, l.index, 1});
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord inverse(const BraidWord& word) {
  BraidWord out{word.signature, word.mode, {}};
  out.letters.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out.letters.push_back({it->kind, it->index, -it->exponent});
  return out;
}

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs) {
  if (!(lhs.signature == rhs.signature) || lhs.mode != rhs.mode)
    throw std::invalid_argument("cannot concatenate words over different groups");
  BraidWord out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

ExponentSummary exponent_summary(const BraidWord& word) {
  validate_word(word);
  if (word.mode != AlphabetMode::Restricted)
    throw std::invalid_argument("word is not in restricted mode");
  ExponentSummary summary;
  summary.k.assign(word.signature.punctures, 0);
  for (const Letter& l : word.letters) {
    switch (l.kind) {
      case LetterKind::Sigma: summary.k_sigma += l.exponent; break;
      case LetterKind::A: summary.k_gen += l.exponent; break;
      case LetterKind::C: summary.k_gen -= l.exponent; break;
      case LetterKind::Z: summary.k[l.index - 1] += l.exponent; break;
      case LetterKind::B: break;  // unreachable in restricted mode
    }
  }
  return summary;
}

long long linking_number(const BraidWord& word) {
  long long lk = 0;
  for (const Letter& l : word.letters) {
    if (l.kind != LetterKind::Sigma)
      throw std::invalid_argument("linking number needs a sigma-only word");
    lk += l.exponent;
  }
  return lk;
}

BraidWord z_last_word(const GroupSignature& sig) {
  validate(sig);
  const int k = sig.contractible();
  BraidWord out{sig, AlphabetMode::Restricted, {}};
  // [a_g, b_g^-1]^-1 ... [a_1, b_1^-1]^-1, each inverse commutator being
  // c_i a_i^-1.
  for (int i = sig.genus; i >= 1; --i) {
    out.letters.push_back({LetterKind::C, i, 1});
    out.letters.push_back({LetterKind::A, i, -1});
  }
  // sigma_1 ... sigma_{k-2} sigma_{k-1}^2 sigma_{k-2} ... sigma_1
  for (int i = 1; i <= k - 2; ++i) out.letters.push_back({LetterKind::Sigma, i, 1});
  if (k >= 2) out.letters.push_back({LetterKind::Sigma, k - 1, 2});
  for (int i = k - 2; i >= 1; --i) out.letters.push_back({LetterKind::Sigma, i, 1});
  // z_1^-1 ... z_{p-1}^-1
  for (int j = 1; j <= sig.punctures - 1; ++j)
    out.letters.push_back({LetterKind::Z, j, -1});
  return out;
}

std::vector<BraidWord> braid_relation_moves(const BraidWord& word) {
  for (const Letter& l : word.letters)
    if (l.kind != LetterKind::Sigma)
      throw std::invalid_argument("relation moves need a sigma-only word");
  std::vector<BraidWord> moves;
  const auto& ls = word.letters;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (std::abs(ls[i].index - ls[i + 1].index) > 1) {
      BraidWord w = word;
      std::swap(w.letters[i], w.letters[i + 1]);
      moves.push_back(std::move(w));
    }
  }
  for (std::size_t i = 0; i + 2 < ls.size(); ++i) {
    const Letter &x = ls[i], &y = ls[i + 1], &z = ls[i + 2];
    const bool adjacent = std::abs(x.index - y.index) == 1;
    if (x.index == z.index && adjacent && x.exponent == y.exponent &&
        y.exponent == z.exponent && std::abs(x.exponent) == 1) {
      BraidWord w = word;
      w.letters[i].index = y.index;
      w.letters[i + 1].index = x.index;
      w.letters[i + 2].index = y.index;
      moves.push_back(std::move(w));
    }
  }
  return moves;
}

}  // namespace braidnorm
