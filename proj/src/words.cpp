#include "heiscurve/words.hpp"

#include <sstream>
#include <stdexcept>

namespace heis {

FreeWord FreeWord::reduce(const std::vector<Letter>& raw) {
  FreeWord w;
  for (const Letter& l : raw) {
    if (l.exp == 0) continue;
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
      w.letters_.back().exp += l.exp;
      if (w.letters_.back().exp == 0) w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

FreeWord FreeWord::parse(const std::string& s) {
  std::vector<Letter> raw;
  for (char ch : s) {
    switch (ch) {
      case 'A': raw.push_back({Gen::A, 1}); break;
      case 'a': raw.push_back({Gen::A, -1}); break;
      case 'B': raw.push_back({Gen::B, 1}); break;
      case 'b': raw.push_back({Gen::B, -1}); break;
      case ' ': case '\t': case '\n': break;
      default:
        throw std::invalid_argument(std::string("bad word character: ") + ch);
    }
  }
  return reduce(raw);
}

FreeWord FreeWord::gen(Gen g, long long exp) {
  return reduce({{g, exp}});
}

FreeWord FreeWord::commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  // concatenate then cancel across the seam
  FreeWord w = *this;
  for (const Letter& l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
      w.letters_.back().exp += l.exp;
      if (w.letters_.back().exp == 0) w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::pow(long long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  long long e = k < 0 ? -k : k;
  FreeWord r;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FreeWord FreeWord::conjugated_by(const FreeWord& g) const {
  return g * *this * g.inverse();
}

long long FreeWord::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

std::string FreeWord::str() const {
  std::ostringstream os;
  for (const Letter& l : letters_) {
    char c = l.gen == Gen::A ? 'A' : 'B';
    if (l.exp < 0) c = l.gen == Gen::A ? 'a' : 'b';
    long long e = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < e; ++i) os << c;
  }
  return os.str();
}

std::pair<long long, long long> FreeWord::exponent_sums() const {
  long long sa = 0, sb = 0;
  for (const Letter& l : letters_)
    (l.gen == Gen::A ? sa : sb) += l.exp;
  return {sa, sb};
}

FreeWord word_C() { return FreeWord::parse("ABab"); }

bool verify_phi_relation(long long n) {
  if (n < 1) throw std::invalid_argument("verify_phi_relation: n >= 1");
  const FreeWord A = word_A(), B = word_B(), C = word_C();
  FreeWord lhs = A.pow(n) * B.pow(n) * A.pow(-n) * B.pow(-n);
  FreeWord rhs;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      rhs = rhs * (A.pow(n - 1 - i) * B.pow(j) * C * B.pow(-j) *
                   A.pow(i + 1 - n));
  return lhs == rhs;
}

bool verify_conjugation_expansion(long long n) {
  if (n < 1) throw std::invalid_argument("verify_conjugation_expansion: n >= 1");
  const FreeWord A = word_A(), B = word_B(), C = word_C();
  FreeWord lhs = A * B.pow(n) * A.inverse() * B.pow(-n);
  FreeWord rhs;
  for (long long i = 0; i < n; ++i)
    rhs = rhs * (B.pow(i) * C * B.pow(-i));
  return lhs == rhs;
}

}  // namespace heis
