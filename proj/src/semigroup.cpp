#include "numsg/semigroup.hpp"

#include <algorithm>  // for sort, unique, min_element
#include <numeric>    // for gcd
#include <string>     // for to_string

#include "numsg/errors.hpp"  // for closure_violation, not_numerical

namespace numsg {

  closure_violation::closure_violation(int a, int b)
      : invalid_parameters("complement not closed under addition: "
                           + std::to_string(a) + " + " + std::to_string(b)
                           + " is a gap"),
        _a(a),
        _b(b) {}

  namespace {
    BitTable table_of(std::vector<int> const& gaps) {
      BitTable bits(gaps.empty() ? 0 : static_cast<std::size_t>(gaps.back()) + 1);
      for (int g : gaps) {
        bits.set(static_cast<std::size_t>(g));
      }
      return bits;
    }
  }  // namespace

  int Semigroup::multiplicity() const noexcept {
    int m = 1;
    while (is_gap(m)) {
      ++m;
    }
    return m;
  }

  Semigroup Semigroup::from_trusted_gaps(std::vector<int> gaps) {
    Semigroup s;
    s._gap_bits = table_of(gaps);
    s._gaps     = std::move(gaps);
    NUMSG_ASSERT(find_closure_violation(s._gap_bits).first == 0,
                 "trusted gap set has closed complement");
    return s;
  }

  Semigroup Semigroup::from_trusted_gaps(BitTable const& gaps) {
    auto v = gaps.to_vector();
    if (v.empty()) {
      return Semigroup();
    }
    Semigroup s;
    // Keep the table tight so equal semigroups have equal tables.
    s._gap_bits = v.back() + 1 == static_cast<int>(gaps.size()) ? gaps
                                                                : table_of(v);
    s._gaps     = std::move(v);
    NUMSG_ASSERT(find_closure_violation(s._gap_bits).first == 0,
                 "trusted gap set has closed complement");
    return s;
  }

  std::pair<int, int> find_closure_violation(BitTable const& gaps) {
    int const top = static_cast<int>(gaps.size()) - 1;
    for (int a = 1; 2 * a <= top; ++a) {
      if (gaps.test(a)) {
        continue;
      }
      for (int b = a; a + b <= top; ++b) {
        if (!gaps.test(b) && gaps.test(a + b)) {
          return {a, b};
        }
      }
    }
    return {0, 0};
  }

  Semigroup from_gaps(std::span<int const> gaps) {
    std::vector<int> v(gaps.begin(), gaps.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.front() <= 0) {
      throw invalid_parameters("gaps must be positive, found "
                               + std::to_string(v.front()));
    }
    auto bits = table_of(v);
    if (auto [a, b] = find_closure_violation(bits); a != 0) {
      throw closure_violation(a, b);
    }
    return Semigroup::from_trusted_gaps(std::move(v));
  }

  Semigroup from_generators(std::span<int const> gens) {
    if (gens.empty()) {
      throw invalid_parameters("generator list is empty");
    }
    int g = 0;
    for (int x : gens) {
      if (x <= 0) {
        throw invalid_parameters("generators must be positive, found "
                                 + std::to_string(x));
      }
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw not_numerical("generators have gcd " + std::to_string(g));
    }
    int const m = *std::min_element(gens.begin(), gens.end());

    // Sieve upward until m consecutive members appear.
    std::vector<char> member{1};
    std::vector<int>  gaps;
    int               run = 1;
    for (int n = 1; run < m; ++n) {
      bool in = false;
      for (int x : gens) {
        if (x <= n && member[n - x]) {
          in = true;
          break;
        }
      }
      member.push_back(in);
      if (in) {
        ++run;
      } else {
        gaps.push_back(n);
        run = 0;
      }
    }
    return Semigroup::from_trusted_gaps(std::move(gaps));
  }

  std::vector<int> minimal_generators(Semigroup const& s) {
    int const m = s.multiplicity();
    if (s.genus() == 0) {
      return {1};
    }
    int const        bound = s.frobenius() + m;
    std::vector<int> msg;
    for (int x = m; x <= bound; ++x) {
      if (!s.contains(x)) {
        continue;
      }
      bool decomposable = false;
      for (int a = m; 2 * a <= x; ++a) {
        if (s.contains(a) && s.contains(x - a)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        msg.push_back(x);
      }
    }
    return msg;
  }

  std::vector<int> pseudo_frobenius(Semigroup const&     s,
                                    std::span<int const> msg) {
    std::vector<int> pf;
    for (int x : s.gaps()) {
      if (std::all_of(msg.begin(), msg.end(), [&](int n) {
            return s.contains(x + n);
          })) {
        pf.push_back(x);
      }
    }
    return pf;
  }

  Stats compute_stats(Semigroup const& s) {
    Stats st;
    st.frobenius    = s.frobenius();
    st.genus        = s.genus();
    st.multiplicity = s.multiplicity();
    st.msg          = minimal_generators(s);
    if (s.genus() == 0) {
      return st;
    }
    st.pf   = pseudo_frobenius(s, st.msg);
    st.type = static_cast<int>(st.pf.size());
    for (int x : s.gaps()) {
      (s.contains(st.frobenius - x) ? st.gaps_first : st.gaps_second)
          .push_back(x);
    }
    return st;
  }

}  // namespace numsg
