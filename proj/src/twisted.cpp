#include "f2fix/twisted.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "f2fix/stallings.hpp"

namespace f2fix {

  namespace {
    // Reduced words F = phi_Z(u) and R = P u, updated one letter of u at a
    // time, together with the length L of their common prefix.
    class Tracker {
     public:
      struct Undo {
        bool        r_popped = false;
        Letter      r_letter = 0;
        std::size_t f_popped = 0;
        std::size_t f_pushed = 0;
        std::size_t pool_mark = 0;
        std::size_t prev_common = 0;
      };

      Tracker(Word const& P, Word const& Z) : R(P.letters()) {
        images[letter::a] = {letter::a};
        images[letter::A] = {letter::A};
        images[letter::b] = Z.letters();
        images[letter::B] = invert(Z).letters();
      }

      Undo push(Letter x) {
        Undo        u;
        std::size_t min_r = R.size();
        u.prev_common     = common;
        if (!R.empty() && R.back() == letter::inverse(x)) {
          u.r_popped = true;
          u.r_letter = R.back();
          R.pop_back();
          min_r = R.size();
        } else {
          R.push_back(x);
        }
        u.pool_mark = pool.size();
        for (Letter y : images[x]) {
          if (u.f_pushed == 0 && !F.empty() && F.back() == letter::inverse(y)) {
            pool.push_back(F.back());
            F.pop_back();
            ++u.f_popped;
          } else {
            F.push_back(y);
            ++u.f_pushed;
          }
        }
        common = std::min({common, F.size() - u.f_pushed, min_r});
        while (common < F.size() && common < R.size() && F[common] == R[common]) {
          ++common;
        }
        return u;
      }

      void pop(Undo const& u) {
        F.resize(F.size() - u.f_pushed);
        for (std::size_t i = pool.size(); i > u.pool_mark; --i) {
          F.push_back(pool[i - 1]);
        }
        pool.resize(u.pool_mark);
        if (u.r_popped) {
          R.push_back(u.r_letter);
        } else {
          R.pop_back();
        }
        common = u.prev_common;
      }

      // F a^k == R, given that the common prefix is tracked.
      bool goal(std::int64_t k) const {
        auto [fl, n] = trailing_a(F);
        auto [rl, m] = trailing_a(R);
        return fl == rl && common >= fl && n + k == m;
      }

      // F a^k == R by direct comparison.
      bool goal_direct(std::int64_t k) const {
        auto [fl, n] = trailing_a(F);
        auto [rl, m] = trailing_a(R);
        return fl == rl && n + k == m
               && std::equal(F.begin(), F.begin() + fl, R.begin());
      }

      // F[L:]^-1 R[L:], which is reduced because F[L] != R[L].
      void residual(std::string& out) const {
        out.clear();
        for (std::size_t i = F.size(); i > common; --i) {
          out.push_back(static_cast<char>('0' + letter::inverse(F[i - 1])));
        }
        out.push_back('|');
        for (std::size_t i = common; i < R.size(); ++i) {
          out.push_back(static_cast<char>('0' + R[i]));
        }
      }

      std::vector<Letter>                F;
      std::vector<Letter>                R;
      std::size_t                        common = 0;

     private:
      static std::pair<std::size_t, std::int64_t> trailing_a(
          std::vector<Letter> const& w) {
        std::size_t i = w.size();
        while (i > 0 && letter::gen(w[i - 1]) == Gen::a) {
          --i;
        }
        std::int64_t run = static_cast<std::int64_t>(w.size() - i);
        return {i, (i < w.size() && w.back() == letter::A) ? -run : run};
      }

      std::array<std::vector<Letter>, 4> images;
      std::vector<Letter>                pool;
    };

    bool is_a_power(Word const& w, std::int64_t& exp) {
      if (w.is_identity()) {
        exp = 0;
        return true;
      }
      if (w.num_syllables() == 1 && w.syllables()[0].gen == Gen::a) {
        exp = w.syllables()[0].exp;
        return true;
      }
      return false;
    }

    void require_valid(Word const& Z) {
      if (is_surjective(phi_Z(Z))) {
        throw std::invalid_argument("phi_Z is surjective for Z = " + to_string(Z));
      }
    }
  }  // namespace

  Endomorphism phi_Z(Word const& Z) {
    return {Word::a(), Z};
  }

  std::pair<TwistedInstance, ZDecomposition> normalize_instance(Word const&  P,
                                                                Word const&  Z,
                                                                std::int64_t k) {
    std::int64_t dummy = 0;
    if (is_a_power(Z, dummy)) {
      throw std::invalid_argument("phi_Z is not injective for Z = " + to_string(Z));
    }
    std::int64_t q0 = Z.leading_exp(Gen::a);
    Word         Zn = multiply({Word::a(-q0), Z, Word::a(q0)});

    ZDecomposition d;
    d.shift                = q0;
    d.q                    = Zn.trailing_exp(Gen::a);
    std::vector<Letter> C  = multiply(Zn, Word::a(-d.q)).letters();
    std::size_t         lo = 0;
    std::size_t         hi = C.size();
    while (hi - lo >= 2 && C[lo] == letter::inverse(C[hi - 1])) {
      ++lo;
      --hi;
    }
    d.Z0 = Word::from_letters(std::vector<Letter>(C.begin() + hi, C.end()));
    d.Z1 = Word::from_letters(
        std::vector<Letter>(C.begin() + lo, C.begin() + hi));

    TwistedInstance inst{multiply(Word::a(-q0), P), Zn, k - q0};
    return {inst, d};
  }

  std::int64_t syllable_count_bound(Word const&           P,
                                    ZDecomposition const& Z,
                                    std::int64_t          k) {
    std::int64_t z_len = 2 * Z.Z0.length() + Z.Z1.length() + std::abs(Z.q);
    std::int64_t p_len = P.length();
    std::int64_t bound = 12 * z_len * p_len + 2 * std::abs(k);
    if (Z.q == 0) {
      bound = std::min(bound, p_len + 2);
    }
    if (stats(Z.Z1).t_b > 1) {
      bound = std::min(bound, 2 * (p_len + std::abs(k)) + 1);
    }
    std::int64_t r = 0;
    if (Z.q != 0 && is_a_power(Z.Z1, r) && stats(Z.Z0).s_b2 >= 1) {
      bound = std::min(bound, z_len * p_len);
    }
    return bound;
  }

  std::int64_t syllable_length_bound(Word const& P, Word const& Z, std::int64_t s) {
    return Z.length() * (s + 2) + P.length();
  }

  bool check_twisted(Word const& P, Word const& Z, std::int64_t k, Word const& W) {
    return multiply({apply(phi_Z(Z), W), Word::a(k), invert(W)}) == P;
  }

  std::optional<Word> solve_twisted(Word const&  P,
                                    Word const&  Z,
                                    std::int64_t k,
                                    std::int64_t max_nodes) {
    auto [inst, dec] = normalize_instance(P, Z, k);
    require_valid(Z);
    if (P == Word::a(k)) {
      return Word();
    }
    std::int64_t const max_syl = syllable_count_bound(inst.P, dec, inst.k);
    std::int64_t const max_run = syllable_length_bound(inst.P, inst.Z, max_syl);
    if (max_syl < 1) {
      return std::nullopt;
    }
    // Letters of F this far from its end may still cancel.
    std::size_t const unstable = static_cast<std::size_t>(dec.Z0.length() + std::abs(dec.q));
    std::size_t const p_len    = static_cast<std::size_t>(inst.P.length());

    Tracker tr(inst.P, inst.Z);

    struct Frame {
      Letter                x = 0;
      Tracker::Undo         undo;
      std::int64_t          syl = 0;
      std::int64_t          run = 0;
      std::array<Letter, 4> cand{};
      int                   num_cand = 0;
      int                   next     = 0;
    };
    std::vector<Frame>              stack;
    std::unordered_set<std::string> seen;
    std::string                     key;
    std::int64_t                    nodes = 0;

    auto r_stable = [&]() { return tr.R.size() + stack.size() - 1 > p_len; };

    auto fill_candidates = [&](Frame& f, bool root) {
      auto allowed = [&](Letter y) {
        if (!root && letter::gen(y) == letter::gen(f.x)) {
          return f.run + 1 <= max_run;
        }
        if (f.syl + 1 > max_syl) {
          return false;
        }
        // A new a-syllable needs room for a b-syllable after it.
        return letter::gen(y) == Gen::b || f.syl + 1 < max_syl;
      };
      f.num_cand = 0;
      std::size_t stable_f = tr.F.size() > unstable ? tr.F.size() - unstable : 0;
      if (!root && r_stable() && stable_f > tr.R.size()) {
        Letter y = tr.F[tr.R.size()];
        if (y != letter::inverse(f.x) && allowed(y)) {
          f.cand[f.num_cand++] = y;
        }
        return;
      }
      for (Letter y = 0; y < 4; ++y) {
        if ((root || y != letter::inverse(f.x)) && allowed(y)) {
          f.cand[f.num_cand++] = y;
        }
      }
    };

    stack.emplace_back();
    fill_candidates(stack.back(), true);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.num_cand) {
        if (stack.size() > 1) {
          tr.pop(top.undo);
        }
        stack.pop_back();
        continue;
      }
      Frame child;
      child.x = top.cand[top.next++];
      bool same = stack.size() > 1 && letter::gen(child.x) == letter::gen(top.x);
      child.syl  = same ? top.syl : top.syl + 1;
      child.run  = same ? top.run + 1 : 1;
      child.undo = tr.push(child.x);
      stack.push_back(child);
      if (++nodes > max_nodes) {
        throw SearchExhausted("solve_twisted: node budget exhausted");
      }

      Frame&      cur      = stack.back();
      std::size_t stable_f = tr.F.size() > unstable ? tr.F.size() - unstable : 0;
      std::size_t stable_r = r_stable() ? tr.R.size() : 0;
      if (tr.common < std::min(stable_f, stable_r)) {
        cur.num_cand = 0;
        continue;
      }
      if (letter::gen(cur.x) == Gen::b && tr.goal(inst.k)) {
        std::vector<Letter> w;
        for (std::size_t i = 1; i < stack.size(); ++i) {
          w.push_back(stack[i].x);
        }
        Word W = Word::from_letters(w);
        if (!check_twisted(P, Z, k, W)) {
          throw std::logic_error("solve_twisted: witness " + to_string(W)
                                 + " fails verification");
        }
        return W;
      }
      // The b-ending solution is unique, so two prefixes with the same
      // residual problem cannot both lead to it.
      tr.residual(key);
      key.push_back(static_cast<char>('0' + cur.x));
      if (!seen.insert(key).second) {
        cur.num_cand = 0;
        continue;
      }
      fill_candidates(cur, false);
    }
    return std::nullopt;
  }

  std::optional<ConjugatorSolution> solve_conjugator_equation(Word const& P,
                                                              Word const& Z) {
    require_valid(Z);
    for (std::int64_t m = 0; m <= Z.length(); ++m) {
      for (std::int64_t k : {m, -m}) {
        if (auto W = solve_twisted(P, Z, k)) {
          return ConjugatorSolution{*W, k};
        }
        if (m == 0) {
          break;
        }
      }
    }
    Endomorphism const              f = phi_Z(Z);
    std::optional<ConjugatorSolution> hit;
    for_each_word(0, P.length(), [&](Word const& W) {
      std::int64_t exp = 0;
      if (is_a_power(multiply({invert(apply(f, W)), P, W}), exp)) {
        hit = ConjugatorSolution{W, exp};
        return false;
      }
      return true;
    });
    return hit;
  }

  std::optional<Word> brute_twisted_oracle(Word const&  P,
                                           Word const&  Z,
                                           std::int64_t k,
                                           std::int64_t max_len) {
    Tracker             tr(P, Z);
    std::vector<Letter> w;
    bool                found = false;

    auto search = [&](auto&& self, std::int64_t depth) -> void {
      if (depth == 0) {
        found = tr.goal_direct(k);
        return;
      }
      for (Letter y = 0; y < 4 && !found; ++y) {
        if (!w.empty() && y == letter::inverse(w.back())) {
          continue;
        }
        auto u = tr.push(y);
        w.push_back(y);
        self(self, depth - 1);
        if (found) {
          return;
        }
        w.pop_back();
        tr.pop(u);
      }
    };
    for (std::int64_t len = 0; len <= max_len; ++len) {
      search(search, len);
      if (found) {
        return Word::from_letters(w);
      }
    }
    return std::nullopt;
  }

}  // namespace f2fix
