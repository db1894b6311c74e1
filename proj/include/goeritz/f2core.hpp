#pragma once

// Exact word algebra in the rank-2 free group <x, y>, with three primitivity
// deciders/filters: Whitehead descent (oracle), Christoffel comparison
// (oracle), and two necessary-condition filters on cyclic words.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goeritz {

enum class Gen : std::uint8_t { x = 0, y = 1 };

// Letter codes: x=0, x^-1=1, y=2, y^-1=3. The numeric order is the canonical
// letter order x < x^-1 < y < y^-1 used for least-rotation forms; c^1 flips
// a code to its inverse.
using LetterCode = std::uint8_t;

struct Letter {
  Gen generator;
  int sign;  // +1 or -1
};

inline constexpr LetterCode letter_code(Letter l) {
  return static_cast<LetterCode>(static_cast<LetterCode>(l.generator) * 2 +
                                 (l.sign < 0 ? 1 : 0));
}
inline constexpr Letter letter_from_code(LetterCode c) {
  return Letter{static_cast<Gen>(c >> 1), (c & 1) ? -1 : +1};
}
inline constexpr LetterCode inverse_code(LetterCode c) {
  return static_cast<LetterCode>(c ^ 1);
}
inline constexpr char letter_char(LetterCode c) {
  constexpr char tab[4] = {'x', 'X', 'y', 'Y'};
  return tab[c];
}

namespace detail {

// In-place free reduction; also the seam-reduction workhorse for products.
inline void free_reduce_codes(std::vector<LetterCode>& out) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (top > 0 && out[top - 1] == inverse_code(out[i])) {
      --top;
    } else {
      out[top++] = out[i];
    }
  }
  out.resize(top);
}

}  // namespace detail

class Word {
 public:
  Word() = default;
  // Any raw letter sequence is accepted; the stored form is freely reduced.
  explicit Word(std::vector<LetterCode> raw) : codes_(std::move(raw)) {
    detail::free_reduce_codes(codes_);
  }
  explicit Word(const std::vector<Letter>& raw) {
    codes_.reserve(raw.size());
    for (Letter l : raw) codes_.push_back(letter_code(l));
    detail::free_reduce_codes(codes_);
  }

  const std::vector<LetterCode>& codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(codes_.size());
    for (LetterCode c : codes_) out.push_back(letter_from_code(c));
    return out;
  }

  Word inverse() const {
    std::vector<LetterCode> rev(codes_.rbegin(), codes_.rend());
    for (LetterCode& c : rev) c = inverse_code(c);
    Word w;
    w.codes_ = std::move(rev);  // inverse of a reduced word is reduced
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<LetterCode> cat;
    cat.reserve(a.codes_.size() + b.codes_.size());
    cat.insert(cat.end(), a.codes_.begin(), a.codes_.end());
    cat.insert(cat.end(), b.codes_.begin(), b.codes_.end());
    detail::free_reduce_codes(cat);
    Word w;
    w.codes_ = std::move(cat);
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) = default;

  static Word from_codes_reduced(std::vector<LetterCode> codes) {
    Word w;
    w.codes_ = std::move(codes);
    return w;
  }

 private:
  std::vector<LetterCode> codes_;
};

inline Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }
inline Word free_reduce(std::vector<LetterCode> raw) {
  return Word(std::move(raw));
}

namespace detail {

// Strip inverse first/last pairs. Input must be freely reduced.
inline void cyclic_trim(std::vector<LetterCode>& v) {
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == inverse_code(v[hi - 1])) {
    ++lo;
    --hi;
  }
  v.assign(v.begin() + static_cast<std::ptrdiff_t>(lo),
           v.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Least rotation under the letter-code order (Booth's algorithm).
inline std::size_t least_rotation(const std::vector<LetterCode>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    LetterCode a = v[(i + k) % n], b = v[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i = i + k + 1;
      if (i == j) ++i;
    } else {
      j = j + k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

// Conjugacy-class representative: cyclically reduced, canonical rotation
// (lexicographically least under x < x^-1 < y < y^-1).
class CyclicWord {
 public:
  CyclicWord() = default;

  const Word& representative() const { return rep_; }
  const std::vector<LetterCode>& codes() const { return rep_.codes(); }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) = default;

  static CyclicWord from_word(const Word& w) {
    std::vector<LetterCode> v = w.codes();
    detail::cyclic_trim(v);
    std::size_t r = detail::least_rotation(v);
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r),
                v.end());
    CyclicWord cw;
    cw.rep_ = Word::from_codes_reduced(std::move(v));
    return cw;
  }

 private:
  Word rep_;
};

inline CyclicWord cyclic_reduce(const Word& w) {
  return CyclicWord::from_word(w);
}

struct AbelianImage {
  long long a = 0;  // exponent sum of x
  long long b = 0;  // exponent sum of y
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

inline AbelianImage abelianize(const Word& w) {
  AbelianImage im;
  for (LetterCode c : w.codes()) {
    long long d = (c & 1) ? -1 : +1;
    if ((c >> 1) == 0)
      im.a += d;
    else
      im.b += d;
  }
  return im;
}

struct F2Automorphism {
  Word imageOfX;
  Word imageOfY;
  std::string name;
};

inline Word apply_automorphism(const F2Automorphism& phi, const Word& w) {
  const std::array<const Word*, 2> img = {&phi.imageOfX, &phi.imageOfY};
  std::array<std::vector<LetterCode>, 4> table;
  for (int g = 0; g < 2; ++g) {
    table[2 * g] = img[g]->codes();
    table[2 * g + 1] = img[g]->inverse().codes();
  }
  std::vector<LetterCode> out;
  out.reserve(w.size() * 2 + 1);
  for (LetterCode c : w.codes())
    out.insert(out.end(), table[c].begin(), table[c].end());
  detail::free_reduce_codes(out);
  return Word::from_codes_reduced(std::move(out));
}

inline F2Automorphism compose(const F2Automorphism& phi,
                              const F2Automorphism& psi) {
  return F2Automorphism{apply_automorphism(phi, psi.imageOfX),
                        apply_automorphism(phi, psi.imageOfY),
                        phi.name + "*" + psi.name};
}

namespace detail {

inline Word word_of(std::initializer_list<LetterCode> cs) {
  return Word(std::vector<LetterCode>(cs));
}

}  // namespace detail

// The rank-2 Whitehead automorphisms: the 8 signed permutations of {x, y}
// (type I) and the 8 one-sided multiplier maps g -> g h^+-1, g -> h^+-1 g
// with the other generator fixed (type II). Closed under inverse.
inline const std::vector<F2Automorphism>& whitehead_generators() {
  static const std::vector<F2Automorphism> gens = [] {
    constexpr LetterCode kx = 0, kX = 1, ky = 2, kY = 3;
    using detail::word_of;
    std::vector<F2Automorphism> v;
    auto add = [&v](Word ix, Word iy, std::string name) {
      v.push_back(F2Automorphism{std::move(ix), std::move(iy),
                                 std::move(name)});
    };
    // type I
    for (LetterCode a : {kx, kX, ky, kY})
      for (LetterCode b : {kx, kX, ky, kY})
        if ((a >> 1) != (b >> 1))
          add(word_of({a}), word_of({b}),
              std::string("x->") + letter_char(a) + ",y->" + letter_char(b));
    // type II
    add(word_of({kx, ky}), word_of({ky}), "x->xy");
    add(word_of({kx, kY}), word_of({ky}), "x->xY");
    add(word_of({ky, kx}), word_of({ky}), "x->yx");
    add(word_of({kY, kx}), word_of({ky}), "x->Yx");
    add(word_of({kx}), word_of({ky, kx}), "y->yx");
    add(word_of({kx}), word_of({ky, kX}), "y->yX");
    add(word_of({kx}), word_of({kx, ky}), "y->xy");
    add(word_of({kx}), word_of({kX, ky}), "y->Xy");
    return v;
  }();
  return gens;
}

enum class Primitivity { Primitive, NotPrimitive, Unknown };

struct PrimitivityVerdict {
  Primitivity value = Primitivity::Unknown;
  std::string witness;
};

inline const char* to_string(Primitivity p) {
  switch (p) {
    case Primitivity::Primitive:
      return "Primitive";
    case Primitivity::NotPrimitive:
      return "NotPrimitive";
    default:
      return "Unknown";
  }
}

namespace detail {

// Image of a cyclic word under a length-2-image substitution, cyclically
// trimmed. Fast path for the descent loop.
inline void apply_and_trim(const F2Automorphism& phi,
                           const std::vector<LetterCode>& in,
                           std::vector<LetterCode>& out) {
  std::array<std::array<LetterCode, 2>, 4> tab{};
  std::array<std::uint8_t, 4> len{};
  const Word* img[2] = {&phi.imageOfX, &phi.imageOfY};
  for (int g = 0; g < 2; ++g) {
    const auto& cs = img[g]->codes();
    len[2 * g] = static_cast<std::uint8_t>(cs.size());
    len[2 * g + 1] = len[2 * g];
    for (std::size_t i = 0; i < cs.size(); ++i) {
      tab[2 * g][i] = cs[i];
      tab[2 * g + 1][cs.size() - 1 - i] = inverse_code(cs[i]);
    }
  }
  out.clear();
  for (LetterCode c : in)
    for (std::uint8_t i = 0; i < len[c]; ++i) {
      LetterCode l = tab[c][i];
      if (!out.empty() && out.back() == inverse_code(l))
        out.pop_back();
      else
        out.push_back(l);
    }
  cyclic_trim(out);
}

// Whitehead descent on the cyclic word; returns true iff primitive. The
// applied generator indices are appended to chain.
inline bool whitehead_descent(std::vector<LetterCode> cur,
                              std::vector<int>* chain) {
  const auto& gens = whitehead_generators();
  cyclic_trim(cur);
  std::vector<LetterCode> cand;
  for (;;) {
    if (cur.size() <= 1) return cur.size() == 1;
    bool reduced = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      apply_and_trim(gens[i], cur, cand);
      if (cand.size() < cur.size()) {
        cur.swap(cand);
        if (chain) chain->push_back(static_cast<int>(i));
        reduced = true;
        break;
      }
    }
    if (!reduced) return false;
  }
}

}  // namespace detail

// Whitehead descent oracle: repeatedly apply any length-decreasing Whitehead
// generator to the cyclic word; primitive iff descent reaches a single
// letter. Never returns Unknown.
inline PrimitivityVerdict is_primitive_whitehead(const Word& w) {
  std::vector<int> chain;
  bool prim = detail::whitehead_descent(w.codes(), &chain);
  PrimitivityVerdict v;
  const auto& gens = whitehead_generators();
  std::string steps;
  for (int i : chain) {
    if (!steps.empty()) steps += ", ";
    steps += gens[static_cast<std::size_t>(i)].name;
  }
  if (prim) {
    v.value = Primitivity::Primitive;
    v.witness = chain.empty() ? "already a single letter"
                              : "reducing chain: " + steps;
  } else {
    v.value = Primitivity::NotPrimitive;
    v.witness = w.empty() ? "empty word"
                          : (chain.empty()
                                 ? "no length-reducing Whitehead generator"
                                 : "descent stuck after: " + steps);
  }
  return v;
}

class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Lower Christoffel word with a letters x and b letters y, by the slope
// construction. Requires gcd(a, b) = 1 and (a, b) != (0, 0).
inline CyclicWord christoffel(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("christoffel: negative count");
  if (std::gcd(a, b) != 1)
    throw NotCoprime("christoffel: gcd(" + std::to_string(a) + ", " +
                     std::to_string(b) + ") != 1");
  std::vector<LetterCode> v;
  if (b == 0) {
    v.push_back(0);  // a == 1
  } else if (a == 0) {
    v.push_back(2);  // b == 1
  } else {
    const long long n = a + b;
    v.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
      v.push_back((i * b) % n < ((i + 1) * b) % n ? 0 : 2);
  }
  return cyclic_reduce(Word(std::move(v)));
}

// Christoffel oracle: sign-normalize, then compare the cyclic class against
// the balanced word of the abelianization. Never returns Unknown.
inline PrimitivityVerdict is_primitive_christoffel(const Word& w) {
  AbelianImage im = abelianize(w);
  long long g = std::gcd(im.a < 0 ? -im.a : im.a, im.b < 0 ? -im.b : im.b);
  if (g != 1) {
    return PrimitivityVerdict{Primitivity::NotPrimitive,
                              "abelianization gcd = " + std::to_string(g)};
  }
  // Flip generator signs so both exponent sums are nonnegative.
  std::vector<LetterCode> v = w.codes();
  if (im.a < 0)
    for (LetterCode& c : v)
      if ((c >> 1) == 0) c = inverse_code(c);
  if (im.b < 0)
    for (LetterCode& c : v)
      if ((c >> 1) == 1) c = inverse_code(c);
  CyclicWord cw = cyclic_reduce(Word(std::move(v)));
  CyclicWord target = christoffel(im.a < 0 ? -im.a : im.a,
                                  im.b < 0 ? -im.b : im.b);
  if (cw == target)
    return PrimitivityVerdict{Primitivity::Primitive,
                              "matches balanced class"};
  return PrimitivityVerdict{Primitivity::NotPrimitive,
                            "cyclic class differs from balanced word"};
}

enum class ShapeCheck { Pass, Fail };

namespace detail {

struct Run {
  int gen;        // 0 = x, 1 = y
  long long exp;  // signed length, never 0
};

// Maximal-run decomposition of the cyclic word.
inline std::vector<Run> cyclic_runs(const std::vector<LetterCode>& v) {
  std::vector<Run> runs;
  for (LetterCode c : v) {
    int g = c >> 1;
    long long d = (c & 1) ? -1 : +1;
    if (!runs.empty() && runs.back().gen == g)
      runs.back().exp += d;
    else
      runs.push_back(Run{g, d});
  }
  // merge around the seam
  if (runs.size() >= 2 && runs.front().gen == runs.back().gen) {
    runs.front().exp += runs.back().exp;
    runs.pop_back();
  }
  return runs;  // cyclically reduced input => no exp hits 0
}

// One frame of the shape check: every sep-run is a single letter of the same
// sign, and the other letter's signed run lengths fit in {n, n+1}.
inline bool shape_frame(const std::vector<Run>& runs, int sep) {
  long long lo = 0, hi = 0;
  bool sawOther = false;
  long long sepSign = 0;
  for (const Run& r : runs) {
    if (r.gen == sep) {
      if (r.exp != 1 && r.exp != -1) return false;
      if (sepSign == 0)
        sepSign = r.exp;
      else if (r.exp != sepSign)
        return false;
    } else {
      if (!sawOther) {
        lo = hi = r.exp;
        sawOther = true;
      } else {
        lo = std::min(lo, r.exp);
        hi = std::max(hi, r.exp);
      }
    }
  }
  return hi - lo <= 1;
}

}  // namespace detail

// Necessary condition for primitivity (never sufficient): some rotation is a
// product of terms x^e y^n / x^e y^(n+1) for fixed e and n, or the same with
// x and y exchanged. Powers of a single generator pass vacuously.
inline ShapeCheck oz_shape_check(const CyclicWord& cw) {
  const auto& v = cw.codes();
  if (v.empty()) return ShapeCheck::Pass;
  auto runs = detail::cyclic_runs(v);
  bool hasX = false, hasY = false;
  for (const auto& r : runs) (r.gen == 0 ? hasX : hasY) = true;
  if (!hasX || !hasY) return ShapeCheck::Pass;
  if (detail::shape_frame(runs, 0) || detail::shape_frame(runs, 1))
    return ShapeCheck::Pass;
  return ShapeCheck::Fail;
}

namespace detail {

// Find y x y^-1 or x y x y^n (n >= 3) as a factor of the cyclic word.
// Returns the matched factor, or empty if none.
inline std::vector<LetterCode> find_forbidden_factor(
    const std::vector<LetterCode>& v) {
  const std::size_t n = v.size();
  auto at = [&](std::size_t i) { return v[i % n]; };
  constexpr LetterCode kx = 0, ky = 2, kY = 3;
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i)
      if (at(i) == ky && at(i + 1) == kx && at(i + 2) == kY)
        return {ky, kx, kY};
  }
  if (n >= 6) {
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i) == kx && at(i + 1) == ky && at(i + 2) == kx) {
        std::size_t run = 0;
        while (run < n - 3 && at(i + 3 + run) == ky) ++run;
        if (run >= 3) {
          std::vector<LetterCode> m = {kx, ky, kx};
          m.insert(m.end(), run, ky);
          return m;
        }
      }
    }
  }
  return {};
}

}  // namespace detail

inline Word swap_generators(const Word& w) {
  std::vector<LetterCode> v = w.codes();
  for (LetterCode& c : v) c = static_cast<LetterCode>(c ^ 2);
  return Word::from_codes_reduced(std::move(v));
}

inline Word flip_generator(const Word& w, Gen g) {
  std::vector<LetterCode> v = w.codes();
  for (LetterCode& c : v)
    if (static_cast<Gen>(c >> 1) == g) c = inverse_code(c);
  return Word::from_codes_reduced(std::move(v));
}

// Subword filter: scans the cyclic word, under all four generator
// orientation conventions, the x<->y swap, and inversion, for the factors
// y x y^-1 or x y x y^n with n >= 3. Sound, never complete: returns
// NotPrimitive with the factor as witness, or Unknown.
inline PrimitivityVerdict lemma22_filter(const CyclicWord& cw) {
  Word base = cw.representative();
  for (int inv = 0; inv < 2; ++inv) {
    Word w0 = inv ? base.inverse() : base;
    for (int swp = 0; swp < 2; ++swp) {
      Word w1 = swp ? swap_generators(w0) : w0;
      for (int fx = 0; fx < 2; ++fx) {
        Word w2 = fx ? flip_generator(w1, Gen::x) : w1;
        for (int fy = 0; fy < 2; ++fy) {
          Word w3 = fy ? flip_generator(w2, Gen::y) : w2;
          auto hit = detail::find_forbidden_factor(w3.codes());
          if (!hit.empty()) {
            std::string s;
            for (LetterCode c : hit) s += letter_char(c);
            return PrimitivityVerdict{Primitivity::NotPrimitive,
                                      "forbidden factor " + s};
          }
        }
      }
    }
  }
  return PrimitivityVerdict{Primitivity::Unknown, ""};
}

class EmptyWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimitiveRoot {
  CyclicWord root;
  int exponent = 1;
};

// Maximal-root decomposition of the cyclic class: cyclic_reduce(w) equals
// root^exponent with the exponent maximal. A word conjugate to the identity
// yields (empty, 1).
inline PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw EmptyWord("primitive_root: empty word");
  CyclicWord cw = cyclic_reduce(w);
  const auto& v = cw.codes();
  const std::size_t n = v.size();
  if (n == 0) return PrimitiveRoot{cw, 1};
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = (v[i] == v[i - d]);
    if (periodic) {
      std::vector<LetterCode> u(v.begin(),
                                v.begin() + static_cast<std::ptrdiff_t>(d));
      PrimitiveRoot r;
      r.root = cyclic_reduce(Word::from_codes_reduced(std::move(u)));
      r.exponent = static_cast<int>(n / d);
      return r;
    }
  }
  return PrimitiveRoot{cw, 1};  // unreachable: d = n always periodic
}

// True iff w is the p-th power of a primitive element (up to conjugacy).
inline bool is_semiprimitive_word(const Word& w, int p) {
  if (p < 2) throw std::invalid_argument("is_semiprimitive_word: p < 2");
  if (w.empty()) return false;
  PrimitiveRoot r = primitive_root(w);
  if (r.exponent != p) return false;
  return is_primitive_whitehead(r.root.representative()).value ==
         Primitivity::Primitive;
}

// ---------------------------------------------------------------------------
// Word text grammar: lowercase x,y are generators, uppercase X,Y inverses,
// ^k (k possibly negative) applies to the preceding letter or parenthesized
// group, whitespace ignored. Examples: xyxy^2, (xy)^5, xYx.

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void append_power(std::vector<LetterCode>& out,
                         const std::vector<LetterCode>& block, long long k) {
  if (k < 0) {
    std::vector<LetterCode> inv(block.rbegin(), block.rend());
    for (LetterCode& c : inv) c = inverse_code(c);
    for (long long i = 0; i < -k; ++i)
      out.insert(out.end(), inv.begin(), inv.end());
  } else {
    for (long long i = 0; i < k; ++i)
      out.insert(out.end(), block.begin(), block.end());
  }
}

inline std::vector<LetterCode> parse_word_group(const std::string& s,
                                                std::size_t& i, bool inner);

inline long long parse_exponent(const std::string& s, std::size_t& i) {
  ++i;  // consume '^'
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw WordParseError("expected integer after '^' at position " +
                         std::to_string(i));
  long long k = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    k = k * 10 + (s[i] - '0');
    if (k > 1000000) throw WordParseError("exponent too large");
    ++i;
  }
  return neg ? -k : k;
}

inline std::vector<LetterCode> parse_word_group(const std::string& s,
                                                std::size_t& i, bool inner) {
  std::vector<LetterCode> out;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ')') {
      if (!inner) throw WordParseError("unmatched ')' at position " +
                                       std::to_string(i));
      return out;
    }
    std::vector<LetterCode> block;
    if (ch == '(') {
      ++i;
      block = parse_word_group(s, i, true);
      if (i >= s.size() || s[i] != ')')
        throw WordParseError("missing ')'");
      ++i;
    } else if (ch == 'x' || ch == 'y' || ch == 'X' || ch == 'Y') {
      LetterCode c = (ch == 'x')   ? 0
                     : (ch == 'X') ? 1
                     : (ch == 'y') ? 2
                                   : 3;
      block.push_back(c);
      ++i;
    } else {
      throw WordParseError(std::string("unexpected character '") + ch +
                           "' at position " + std::to_string(i));
    }
    long long k = 1;
    if (i < s.size() && s[i] == '^') k = parse_exponent(s, i);
    append_power(out, block, k);
  }
  if (inner) throw WordParseError("missing ')'");
  return out;
}

}  // namespace detail

inline Word parse_word(const std::string& s) {
  std::size_t i = 0;
  return Word(detail::parse_word_group(s, i, false));
}

// Run-length rendering: x, X (= x^-1), x^3, X^3 (= x^-3). Empty word is "1".
inline std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& v = w.codes();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    out += letter_char(v[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string render_word(const CyclicWord& cw) {
  return render_word(cw.representative());
}

}  // namespace goeritz
