// Reduced-word arithmetic in the free group on A, B (the group Gamma-bar(2))
// and verification of its explicit commutator identities.
#ifndef HEISCURVE_WORDS_HPP
#define HEISCURVE_WORDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heis {

enum class Gen : std::uint8_t { A, B };

struct Letter {
  Gen gen;
  long long exp;  // nonzero in reduced form
  bool operator==(const Letter&) const = default;
};

// Run-length encoded reduced word; the canonical representative of its
// group element.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord reduce(const std::vector<Letter>& raw);
  // String over {A,a,B,b}; lowercase is the inverse ("ABab" = [A,B]).
  static FreeWord parse(const std::string& s);
  static FreeWord gen(Gen g, long long exp = 1);
  static FreeWord commutator(const FreeWord& u, const FreeWord& v);

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord pow(long long k) const;
  FreeWord conjugated_by(const FreeWord& g) const;  // g * w * g^-1

  bool operator==(const FreeWord&) const = default;
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  long long length() const;  // total letter count
  std::string str() const;

  // phi_1: (sum of A-exponents, sum of B-exponents)
  std::pair<long long, long long> exponent_sums() const;

 private:
  std::vector<Letter> letters_;
};

inline FreeWord word_A() { return FreeWord::gen(Gen::A); }
inline FreeWord word_B() { return FreeWord::gen(Gen::B); }
// C = A B A^-1 B^-1
FreeWord word_C();

// A^N B^N A^-N B^-N  ==  prod_{i=0..N-1} prod_{j=0..N-1}
//   A^{N-1-i} B^j C B^{-j} A^{i+1-N},  i outer, j inner, left to right.
bool verify_phi_relation(long long n);

// A B^N A^-1 B^-N  ==  C (BCB^-1) (B^2CB^-2) ... (B^{N-1}CB^{1-N})
bool verify_conjugation_expansion(long long n);

}  // namespace heis

#endif
