#include "f2fix/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace f2fix {

  namespace {
    std::int64_t abs64(std::int64_t x) {
      return x < 0 ? -x : x;
    }

    Letter letter_of(Syllable s) {
      return letter::make(s.gen, s.exp < 0 ? -1 : 1);
    }

    // Index of the lexicographically least rotation (smallest index among
    // ties).
    std::size_t least_rotation(std::vector<Letter> const& s) {
      std::size_t const n = s.size();
      std::size_t       i = 0, j = 1, k = 0;
      while (i < n && j < n && k < n) {
        Letter x = s[(i + k) % n], y = s[(j + k) % n];
        if (x == y) {
          ++k;
          continue;
        }
        if (x > y) {
          i += k + 1;
        } else {
          j += k + 1;
        }
        if (i == j) {
          ++j;
        }
        k = 0;
      }
      return std::min(i, j);
    }

    // Smallest p dividing n with s periodic of period p.
    std::size_t primitive_period(std::vector<Letter> const& s) {
      std::size_t const n = s.size();
      if (n == 0) {
        return 0;
      }
      std::vector<std::size_t> pi(n, 0);
      for (std::size_t q = 1; q < n; ++q) {
        std::size_t k = pi[q - 1];
        while (k > 0 && s[q] != s[k]) {
          k = pi[k - 1];
        }
        if (s[q] == s[k]) {
          ++k;
        }
        pi[q] = k;
      }
      std::size_t p = n - pi[n - 1];
      return n % p == 0 ? p : n;
    }

    Word slice(std::vector<Letter> const& s, std::size_t from, std::size_t to) {
      return Word::from_letters(
          std::vector<Letter>(s.begin() + from, s.begin() + to));
    }

    struct CoreSplit {
      std::vector<Letter> core;
      Word                h;  // w = h^-1 core h
    };

    CoreSplit split_core(Word const& w) {
      auto        l = w.letters();
      std::size_t i = 0, j = l.size();
      while (j > i + 1 && l[i] == letter::inverse(l[j - 1])) {
        ++i;
        --j;
      }
      CoreSplit out;
      out.core.assign(l.begin() + i, l.begin() + j);
      out.h = invert(slice(l, 0, i));
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::power_of(Gen g, std::int64_t exp) {
    Word w;
    w.push(g, exp);
    return w;
  }

  Word Word::from_letters(std::vector<Letter> const& raw) {
    Word w;
    for (Letter x : raw) {
      w.push(letter::gen(x), letter::sign(x));
    }
    return w;
  }

  std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(_len));
    for (auto const& s : _syl) {
      out.insert(out.end(), static_cast<std::size_t>(abs64(s.exp)), letter_of(s));
    }
    return out;
  }

  void Word::push(Gen g, std::int64_t exp) {
    if (exp == 0) {
      return;
    }
    if (!_syl.empty() && _syl.back().gen == g) {
      std::int64_t& e = _syl.back().exp;
      _len += abs64(e + exp) - abs64(e);
      e += exp;
      if (e == 0) {
        _syl.pop_back();
      }
      return;
    }
    _syl.push_back({g, exp});
    _len += abs64(exp);
  }

  void Word::push(Word const& w) {
    for (auto const& s : w._syl) {
      push(s);
    }
  }

  void Word::push_inverse(Word const& w) {
    for (auto it = w._syl.rbegin(); it != w._syl.rend(); ++it) {
      push(it->gen, -it->exp);
    }
  }

  std::int64_t Word::leading_exp(Gen g) const noexcept {
    return (!_syl.empty() && _syl.front().gen == g) ? _syl.front().exp : 0;
  }

  std::int64_t Word::trailing_exp(Gen g) const noexcept {
    return (!_syl.empty() && _syl.back().gen == g) ? _syl.back().exp : 0;
  }

  std::strong_ordering shortlex_compare(Word const& u, Word const& v) {
    if (u.length() != v.length()) {
      return u.length() <=> v.length();
    }
    auto const& x = u.syllables();
    auto const& y = v.syllables();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (x[i] == y[i]) {
        continue;
      }
      Letter lx = letter_of(x[i]), ly = letter_of(y[i]);
      if (lx != ly) {
        return lx <=> ly;
      }
      // Same letter, different run lengths: the shorter run is followed by
      // a letter of the other generator.
      std::int64_t rx = abs64(x[i].exp), ry = abs64(y[i].exp);
      if (rx < ry) {
        return letter_of(x[i + 1]) <=> lx;
      }
      return lx <=> letter_of(y[i + 1]);
    }
    return std::strong_ordering::equal;
  }

  Word reduce(std::vector<Letter> const& raw) {
    return Word::from_letters(raw);
  }

  Word multiply(Word const& u, Word const& v) {
    Word w = u;
    w.push(v);
    return w;
  }

  Word multiply(std::initializer_list<Word> ws) {
    Word w;
    for (auto const& x : ws) {
      w.push(x);
    }
    return w;
  }

  Word invert(Word const& u) {
    Word w;
    w.push_inverse(u);
    return w;
  }

  Word power(Word const& u, std::int64_t n) {
    Word w;
    if (n >= 0) {
      for (std::int64_t i = 0; i < n; ++i) {
        w.push(u);
      }
    } else {
      for (std::int64_t i = 0; i < -n; ++i) {
        w.push_inverse(u);
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text) {
    auto is_space = [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    };
    std::string compact;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!is_space(text[i])) {
        compact.push_back(text[i]);
        where.push_back(i);
      }
    }
    if (compact.empty() || compact == "1") {
      return Word();
    }
    Word        w;
    std::size_t i = 0;
    while (i < compact.size()) {
      char c = compact[i];
      Gen  g;
      int  sign;
      switch (c) {
        case 'a': g = Gen::a, sign = 1; break;
        case 'A': g = Gen::a, sign = -1; break;
        case 'b': g = Gen::b, sign = 1; break;
        case 'B': g = Gen::b, sign = -1; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           where[i]);
      }
      ++i;
      std::int64_t exp = 1;
      if (i < compact.size() && compact[i] == '^') {
        std::size_t start = i++;
        std::size_t num   = i;
        if (num < compact.size() && (compact[num] == '-' || compact[num] == '+')) {
          ++num;
        }
        std::size_t end = num;
        while (end < compact.size()
               && std::isdigit(static_cast<unsigned char>(compact[end]))) {
          ++end;
        }
        if (end == num) {
          throw ParseError("malformed exponent", where[start]);
        }
        std::int64_t value = 0;
        auto [ptr, ec]     = std::from_chars(
            compact.data() + num, compact.data() + end, value);
        if (ec != std::errc() || value > (std::int64_t{1} << 40)) {
          throw ParseError("exponent out of range", where[start]);
        }
        exp = compact[i] == '-' ? -value : value;
        i   = end;
      }
      w.push(g, sign * exp);
    }
    return w;
  }

  std::string to_string(Word const& w) {
    if (w.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w.syllables()) {
      char c = s.gen == Gen::a ? 'a' : 'b';
      if (s.exp < 0) {
        c = static_cast<char>(std::toupper(c));
      }
      out.push_back(c);
      if (abs64(s.exp) > 1) {
        out += '^';
        out += std::to_string(abs64(s.exp));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugacy
  ////////////////////////////////////////////////////////////////////////

  CyclicWord::CyclicWord(Word const& w) {
    _rep = cyclic_reduce(w).first._rep;
  }

  CyclicWord class_up_to_inversion(Word const& w) {
    CyclicWord c(w), d(invert(w));
    return d < c ? d : c;
  }

  std::pair<CyclicWord, Word> cyclic_reduce(Word const& w) {
    CoreSplit         split = split_core(w);
    auto const&       core  = split.core;
    std::size_t const n     = core.size();
    CyclicWord        c;
    if (n == 0) {
      return {c, Word()};
    }
    std::size_t r = least_rotation(core);
    std::size_t p = primitive_period(core);
    r %= p;
    std::vector<Letter> rotated(core.begin() + r, core.end());
    rotated.insert(rotated.end(), core.begin(), core.begin() + r);
    c._rep = Word::from_letters(rotated);
    if (r == 0) {
      return {c, split.h};
    }
    // core = u v with |u| = r; core = u rot u^-1 = v' ^-1 rot v' where v' is
    // the final p - r letters.
    Word g1 = multiply(invert(slice(core, 0, r)), split.h);
    Word g2 = multiply(slice(core, n - (p - r), n), split.h);
    return {c, g2.length() < g1.length() ? g2 : g1};
  }

  std::optional<Word> conjugacy_witness(Word const& u, Word const& v) {
    auto [cu, gu] = cyclic_reduce(u);
    auto [cv, gv] = cyclic_reduce(v);
    if (!(cu == cv)) {
      return std::nullopt;
    }
    return multiply(invert(gu), gv);
  }

  bool is_conjugate(Word const& u, Word const& v) {
    return CyclicWord(u) == CyclicWord(v);
  }

  std::pair<Word, std::int64_t> root(Word const& w) {
    if (w.is_identity()) {
      throw std::invalid_argument("root: the identity has no root");
    }
    CoreSplit   split = split_core(w);
    std::size_t p     = primitive_period(split.core);
    Word        r     = multiply(
        {invert(split.h), slice(split.core, 0, p), split.h});
    return {r, static_cast<std::int64_t>(split.core.size() / p)};
  }

  SyllableStats stats(Word const& w) {
    SyllableStats st;
    for (auto const& s : w.syllables()) {
      std::int64_t len = abs64(s.exp);
      ++st.s;
      if (s.gen == Gen::a) {
        ++st.s_a;
        st.s_a2 += len >= 2;
        st.t_a += len;
        st.sigma_a += s.exp;
      } else {
        ++st.s_b;
        st.s_b2 += len >= 2;
        st.t_b += len;
        st.sigma_b += s.exp;
      }
    }
    return st;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  Word apply(Endomorphism const& phi, Word const& w) {
    Word out;
    for (auto const& s : w.syllables()) {
      Word const& img = phi.image(s.gen);
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < s.exp; ++i) {
          out.push(img);
        }
      } else {
        for (std::int64_t i = 0; i < -s.exp; ++i) {
          out.push_inverse(img);
        }
      }
    }
    return out;
  }

  Endomorphism compose(Endomorphism const& phi, Endomorphism const& chi) {
    return {apply(phi, chi.image_a), apply(phi, chi.image_b)};
  }

  Endomorphism endo_power(Endomorphism const& phi, std::int64_t n) {
    if (n < 1) {
      throw std::invalid_argument("endo_power: exponent must be positive");
    }
    Endomorphism result = phi;
    for (std::int64_t i = 1; i < n; ++i) {
      result = compose(phi, result);
    }
    return result;
  }

  Endomorphism inner(Word const& g) {
    Word ginv = invert(g);
    return {multiply({ginv, Word::a(), g}), multiply({ginv, Word::b(), g})};
  }

  std::string to_string(Endomorphism const& phi) {
    return "a->" + to_string(phi.image_a) + ";b->" + to_string(phi.image_b);
  }

  bool for_each_word(std::int64_t                            lo,
                     std::int64_t                            hi,
                     std::function<bool(Word const&)> const& visit) {
    std::vector<Letter> cur;
    std::function<bool(std::int64_t)> rec = [&](std::int64_t len) -> bool {
      if (static_cast<std::int64_t>(cur.size()) == len) {
        return visit(Word::from_letters(cur));
      }
      for (Letter x = 0; x < 4; ++x) {
        if (!cur.empty() && cur.back() == letter::inverse(x)) {
          continue;
        }
        cur.push_back(x);
        bool go_on = rec(len);
        cur.pop_back();
        if (!go_on) {
          return false;
        }
      }
      return true;
    };
    for (std::int64_t len = std::max<std::int64_t>(lo, 0); len <= hi; ++len) {
      if (!rec(len)) {
        return false;
      }
    }
    return true;
  }

}  // namespace f2fix
