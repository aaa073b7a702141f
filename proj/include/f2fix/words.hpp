// Free group F(a,b): words, cyclic words, endomorphisms.

#ifndef F2FIX_WORDS_HPP_
#define F2FIX_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f2fix {

  //! The two generators of F(a,b).
  enum class Gen : std::uint8_t { a = 0, b = 1 };

  inline constexpr Gen other(Gen g) noexcept {
    return g == Gen::a ? Gen::b : Gen::a;
  }

  //! A letter is one of a, A, b, B, encoded as 0, 1, 2, 3 so that the
  //! numeric order is the order a < A < b < B used for canonical rotations.
  using Letter = std::uint8_t;

  namespace letter {
    inline constexpr Letter a = 0;
    inline constexpr Letter A = 1;
    inline constexpr Letter b = 2;
    inline constexpr Letter B = 3;

    inline constexpr Letter inverse(Letter x) noexcept {
      return x ^ 1;
    }
    inline constexpr Gen gen(Letter x) noexcept {
      return static_cast<Gen>(x >> 1);
    }
    inline constexpr int sign(Letter x) noexcept {
      return (x & 1) ? -1 : 1;
    }
    inline constexpr Letter make(Gen g, int sign) noexcept {
      return static_cast<Letter>((static_cast<int>(g) << 1) | (sign < 0));
    }
  }  // namespace letter

  //! A maximal power of a single generator inside a reduced word.
  struct Syllable {
    Gen          gen;
    std::int64_t exp;

    bool operator==(Syllable const&) const = default;
  };

  //! A freely reduced element of F(a,b), stored as a list of syllables.
  //!
  //! Adjacent syllables always have distinct generators and every exponent
  //! is nonzero; the empty list is the identity. Values are immutable once
  //! built, apart from the in-place reduction helpers used by builders.
  class Word {
   public:
    Word() = default;

    //! The word g^exp (identity when exp == 0).
    static Word power_of(Gen g, std::int64_t exp);
    static Word a(std::int64_t exp = 1) {
      return power_of(Gen::a, exp);
    }
    static Word b(std::int64_t exp = 1) {
      return power_of(Gen::b, exp);
    }

    //! Freely reduce an arbitrary sequence of letters.
    static Word from_letters(std::vector<Letter> const& raw);

    std::vector<Syllable> const& syllables() const noexcept {
      return _syl;
    }
    std::size_t num_syllables() const noexcept {
      return _syl.size();
    }
    std::int64_t length() const noexcept {
      return _len;
    }
    bool is_identity() const noexcept {
      return _syl.empty();
    }
    std::vector<Letter> letters() const;

    //! Append g^exp and freely reduce at the seam.
    void push(Gen g, std::int64_t exp);
    void push(Syllable s) {
      push(s.gen, s.exp);
    }
    void push(Word const& w);
    void push_inverse(Word const& w);

    //! Exponent of the leading (trailing) syllable if it is a power of g,
    //! and 0 otherwise.
    std::int64_t leading_exp(Gen g) const noexcept;
    std::int64_t trailing_exp(Gen g) const noexcept;

    bool operator==(Word const&) const = default;

   private:
    std::vector<Syllable> _syl;
    std::int64_t          _len = 0;
  };

  //! Shortlex comparison on letter strings under a < A < b < B.
  std::strong_ordering shortlex_compare(Word const& u, Word const& v);

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const {
      return shortlex_compare(u, v) < 0;
    }
  };

  Word reduce(std::vector<Letter> const& raw);
  Word multiply(Word const& u, Word const& v);
  Word multiply(std::initializer_list<Word> ws);
  Word invert(Word const& u);
  Word power(Word const& u, std::int64_t n);

  //! Thrown by the word and endomorphism parsers; position is a 0-based
  //! offset into the input string.
  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)),
          _pos(pos) {}
    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  //! Parse the text syntax: a, b, A, B with optional ^n exponents (n may be
  //! negative), whitespace ignored, "1" or "" for the identity.
  Word parse_word(std::string_view text);

  //! Canonical text form: uppercase inverses, ^n for runs of length >= 2,
  //! and "1" for the identity.
  std::string to_string(Word const& w);

  //! A conjugacy class, represented by the lexicographically least rotation
  //! of a cyclically reduced representative.
  class CyclicWord {
   public:
    CyclicWord() = default;
    //! Any word; it is cyclically reduced and rotated to canonical form.
    explicit CyclicWord(Word const& w);

    Word const& rep() const noexcept {
      return _rep;
    }
    std::int64_t length() const noexcept {
      return _rep.length();
    }

    bool operator==(CyclicWord const& other) const {
      return _rep == other._rep;
    }
    bool operator<(CyclicWord const& other) const {
      return shortlex_compare(_rep, other._rep) < 0;
    }

   private:
    friend std::pair<CyclicWord, Word> cyclic_reduce(Word const& w);

    Word _rep;
  };

  //! The class of w or of w^-1, whichever has the smaller canonical
  //! rotation.
  CyclicWord class_up_to_inversion(Word const& w);

  //! Returns (c, g) with w = g^-1 c.rep() g and g as short as possible.
  std::pair<CyclicWord, Word> cyclic_reduce(Word const& w);

  //! Some g with g^-1 u g = v, if u and v are conjugate.
  std::optional<Word> conjugacy_witness(Word const& u, Word const& v);
  bool is_conjugate(Word const& u, Word const& v);

  //! w = r^n with n maximal. Throws std::invalid_argument on the identity.
  std::pair<Word, std::int64_t> root(Word const& w);

  struct SyllableStats {
    std::int64_t s       = 0;
    std::int64_t s_a     = 0;
    std::int64_t s_b     = 0;
    std::int64_t s_a2    = 0;
    std::int64_t s_b2    = 0;
    std::int64_t t_a     = 0;
    std::int64_t t_b     = 0;
    std::int64_t sigma_a = 0;
    std::int64_t sigma_b = 0;

    bool operator==(SyllableStats const&) const = default;
  };

  SyllableStats stats(Word const& w);

  //! An endomorphism of F(a,b), given by the images of a and b.
  struct Endomorphism {
    Word image_a;
    Word image_b;

    Word const& image(Gen g) const noexcept {
      return g == Gen::a ? image_a : image_b;
    }
    static Endomorphism identity() {
      return {Word::a(), Word::b()};
    }
    bool operator==(Endomorphism const&) const = default;
  };

  Word apply(Endomorphism const& phi, Word const& w);

  //! x -> phi(chi(x)).
  Endomorphism compose(Endomorphism const& phi, Endomorphism const& chi);
  Endomorphism endo_power(Endomorphism const& phi, std::int64_t n);

  //! The inner automorphism w -> g^-1 w g.
  Endomorphism inner(Word const& g);

  std::string to_string(Endomorphism const& phi);

  //! Visit every reduced word of length lo..hi in shortlex order. The
  //! visitor returns false to stop early; the function returns false iff it
  //! was stopped.
  bool for_each_word(std::int64_t                            lo,
                     std::int64_t                            hi,
                     std::function<bool(Word const&)> const& visit);

}  // namespace f2fix

#endif  // F2FIX_WORDS_HPP_
