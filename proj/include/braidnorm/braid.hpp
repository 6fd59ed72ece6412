#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidnorm {

// Marked circles on a genus-g surface with p boundary components.
// n_strands counts all of them; the first n_strands - genus are the
// contractible ones whose base points actually braid.
struct GroupSignature {
  int n_strands = 1;
  int genus = 0;
  int punctures = 1;

  int contractible() const { return n_strands - genus; }

  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

// Throws std::invalid_argument unless n_strands >= 1, genus >= 0,
// punctures >= 1 and n_strands > genus.
void validate(const GroupSignature& sig);

enum class LetterKind : char {
  Sigma = 's',  // half-twist of two adjacent contractible base points
  A = 'a',      // loop along a handle
  B = 'b',      // dual handle loop (Full alphabet only)
  C = 'c',      // abbreviation for b^-1 a b
  Z = 'z',      // loop around a boundary component
};

struct Letter {
  LetterKind kind;
  int index;
  long long exponent;  // never zero

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Restricted is the alphabet of the stabilised-link braids: sigma indices
// run over contractible circles only (1..k-1 with k = n_strands - genus),
// b is forbidden, c is available. Full allows every generator of the
// ambient group, with sigma indices up to n_strands - 1.
enum class AlphabetMode { Restricted, Full };

struct BraidWord {
  GroupSignature signature;
  AlphabetMode mode = AlphabetMode::Restricted;
  std::vector<Letter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// The exponent sums that every bound depends on. k has one slot per
// boundary component; the last slot is identically zero since there is no
// z_p generator.
struct ExponentSummary {
  long long k_gen = 0;    // a letters count +exponent, c letters -exponent
  long long k_sigma = 0;  // sum over sigma letters
  std::vector<long long> k;

  friend bool operator==(const ExponentSummary&, const ExponentSummary&) = default;
};

ExponentSummary operator+(const ExponentSummary& x, const ExponentSummary& y);
ExponentSummary operator-(const ExponentSummary& x);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  // Byte offset into the input text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: word := (letter WS*)* ; letter := base ("^" signed-int)? ;
// base := ("s"|"a"|"b"|"c"|"z") positive-int. Omitted exponent means 1.
// The word is returned exactly as written, unreduced.
BraidWord parse_word(const std::string& text, const GroupSignature& sig,
                     AlphabetMode mode);

// Inverse of parse_word: "s1 s2^-1 c1 z1^3". Exponent 1 is omitted.
std::string format_word(const BraidWord& word);

// Merges adjacent letters with equal (kind, index), dropping the letter when
// the exponents cancel; cascades, so nested inverse pairs vanish.
BraidWord free_reduce(const BraidWord& word);

// Replaces every c_i^e by b_i^-1 a_i^e b_i. Input must be Restricted; the
// output is a Full-mode word.
BraidWord expand_restricted(const BraidWord& word);

BraidWord inverse(const BraidWord& word);

// Concatenation; both words must share signature and mode.
BraidWord concat(const BraidWord& lhs, const BraidWord& rhs);

// Requires Restricted mode.
ExponentSummary exponent_summary(const BraidWord& word);

// Sum of sigma exponents; throws if any non-sigma letter is present.
long long linking_number(const BraidWord& word);

// The loop around the last boundary component, which is not a generator:
// it is solved from the relation
//     [a_1,b_1^-1] ... [a_g,b_g^-1] = sigma_1 ... sigma_{k-1}^2 ... sigma_1
//                                     z_1^-1 ... z_p^-1
// with [a_i,b_i^-1] = a_i c_i^-1, giving (letter for letter)
//     z_p = (c_g a_g^-1) ... (c_1 a_1^-1)
//           sigma_1 ... sigma_{k-2} sigma_{k-1}^2 sigma_{k-2} ... sigma_1
//           z_1^-1 ... z_{p-1}^-1
// The exponent sums are forced: k_gen = -2g, k_sigma = 2(k-1), k_j = -1.
BraidWord z_last_word(const GroupSignature& sig);

// All words one commutation (|i-j| > 1) or one braid-relation rewrite
// (sigma_i sigma_{i+1} sigma_i <-> sigma_{i+1} sigma_i sigma_{i+1}, single
// +-1 exponents) away from the input. Input must be sigma-only.
std::vector<BraidWord> braid_relation_moves(const BraidWord& word);

}  // namespace braidnorm
