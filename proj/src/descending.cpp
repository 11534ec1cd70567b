#include "numsg/descending.hpp"

#include <algorithm>  // for sort, min
#include <cstdint>    // for uint64_t
#include <numeric>    // for iota
#include <span>       // for span
#include <string>     // for to_string
#include <utility>    // for move

#include "numsg/classify.hpp"  // for is_almost_symmetric
#include "numsg/errors.hpp"    // for invalid_parameters, NUMSG_ASSERT
#include "numsg/oracle.hpp"    // for oracle_as

namespace numsg {

  namespace {

    using Word = std::uint64_t;

    void require_frobenius(int f) {
      if (f < 1) {
        throw invalid_parameters("Frobenius number must be >= 1, found "
                                 + std::to_string(f));
      }
    }

    std::size_t words_for(int f) {
      return (static_cast<std::size_t>(f) + 1 + 63) / 64;
    }

    // Word k of `words` with bits a and b cleared; zero past the end.
    Word word_without(std::span<Word const> words,
                      std::size_t           k,
                      std::size_t           a,
                      std::size_t           b) noexcept {
      if (k >= words.size()) {
        return 0;
      }
      Word w = words[k];
      if ((a >> 6) == k) {
        w &= ~(Word{1} << (a & 63));
      }
      if ((b >> 6) == k) {
        w &= ~(Word{1} << (b & 63));
      }
      return w;
    }

    bool has_bit(std::span<Word const> words, std::size_t i) noexcept {
      return (i >> 6) < words.size() && ((words[i >> 6] >> (i & 63)) & 1U);
    }

    // Conditions (b) and (c) for S = S' u {x}, evaluated on the parent's
    // words without materializing the child:
    //   (b) (Ga1 >> x) is contained in Ga1, where Ga1 = gaps \ {x};
    //   (c) (PF1 << x) misses Ga1, where PF1 = pf \ {x, F - x}.
    // x must be a gap with 1 <= x < F.
    bool passes(std::span<Word const> gaps,
                std::span<Word const> pf,
                int                   f,
                std::size_t           x) noexcept {
      std::size_t const fx   = static_cast<std::size_t>(f) - x;
      std::size_t const skip = x >> 6;
      unsigned const    bits = x & 63;
      auto ga1 = [&](std::size_t k) { return word_without(gaps, k, x, x); };
      auto pf1 = [&](std::size_t k) { return word_without(pf, k, x, fx); };

      for (std::size_t k = 0; k + skip < gaps.size(); ++k) {
        Word down = ga1(k + skip) >> bits;
        if (bits != 0) {
          down |= ga1(k + skip + 1) << (64 - bits);
        }
        if ((down & ~ga1(k)) != 0) {
          return false;
        }
      }
      for (std::size_t k = skip; k < gaps.size(); ++k) {
        Word up = pf1(k - skip) << bits;
        if (bits != 0 && k > skip) {
          up |= pf1(k - skip - 1) >> (64 - bits);
        }
        if ((up & ga1(k)) != 0) {
          return false;
        }
      }
      return true;
    }

    // One level of the descent, stored flat: node i owns words
    // [i * width, (i + 1) * width) of gaps and of pf.
    struct Level {
      int               frobenius = 0;
      int               type      = 0;
      std::size_t       width     = 0;
      std::vector<Word> gaps;
      std::vector<Word> pf;
      std::vector<int>  multiplicity;

      std::size_t size() const noexcept {
        return multiplicity.size();
      }
      std::span<Word const> gap_words(std::size_t i) const noexcept {
        return {gaps.data() + i * width, width};
      }
      std::span<Word const> pf_words(std::size_t i) const noexcept {
        return {pf.data() + i * width, width};
      }

      void push(std::span<Word const> g, std::span<Word const> p, int m) {
        gaps.insert(gaps.end(), g.begin(), g.end());
        pf.insert(pf.end(), p.begin(), p.end());
        multiplicity.push_back(m);
      }

      void append(Level const& that) {
        gaps.insert(gaps.end(), that.gaps.begin(), that.gaps.end());
        pf.insert(pf.end(), that.pf.begin(), that.pf.end());
        multiplicity.insert(multiplicity.end(),
                            that.multiplicity.begin(),
                            that.multiplicity.end());
      }

      DescendNode node(std::size_t i) const {
        auto const n = static_cast<std::size_t>(frobenius) + 1;
        return DescendNode(
            BitTable(n, gap_words(i)), BitTable(n, pf_words(i)), multiplicity[i]);
      }
    };

    Level root_level(int f) {
      Level root;
      root.frobenius = f;
      root.type      = f;
      root.width     = words_for(f);
      auto const t   = descend_root(f);
      root.push(t.gap_bits().words(), t.pf_bits().words(), t.multiplicity());
      return root;
    }

    // Appends to `out` the children of node i of `level`, in increasing x.
    void expand(Level const& level, std::size_t i, Level& out) {
      auto const        gaps = level.gap_words(i);
      auto const        pf   = level.pf_words(i);
      int const         f    = level.frobenius;
      std::vector<Word> g(level.width);
      std::vector<Word> p(level.width);
#ifdef NUMSG_CHECKS
      for (int x = 1; x < level.type - 1 && x < level.multiplicity[i]; ++x) {
        NUMSG_ASSERT(!passes(gaps, pf, f, static_cast<std::size_t>(x)),
                     "no x below t - 1 is accepted");
      }
#endif
      for (int x = level.type - 1; x <= level.multiplicity[i] - 1; ++x) {
        auto const ux = static_cast<std::size_t>(x);
        // x = F would change the Frobenius number.
        if (x >= f || !has_bit(gaps, ux) || !passes(gaps, pf, f, ux)) {
          continue;
        }
        for (std::size_t k = 0; k < level.width; ++k) {
          g[k] = word_without(gaps, k, ux, ux);
          p[k] = word_without(pf, k, ux, static_cast<std::size_t>(f - x));
        }
        out.push(g, p, x);
      }
    }

    Level next_level(Level const& level, Executor const& executor) {
      NUMSG_ASSERT(level.type >= 3, "descent needs type >= 3");
      Level next;
      next.frobenius = level.frobenius;
      next.type      = level.type - 2;
      next.width     = level.width;
      // Fixed chunking keeps the concatenation order independent of the
      // executor.
      std::size_t const chunk  = 64;
      std::size_t const chunks = (level.size() + chunk - 1) / chunk;
      std::vector<Level> parts(chunks, next);
      executor.parallel_for(chunks, [&](std::size_t c) {
        std::size_t const end = std::min(level.size(), (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
          expand(level, i, parts[c]);
        }
      });
      for (auto const& part : parts) {
        next.append(part);
      }
#ifdef NUMSG_CHECKS
      for (std::size_t i = 0; i < next.size(); ++i) {
        auto const node = next.node(i);
        auto const st   = compute_stats(node.semigroup());
        NUMSG_ASSERT(st.pf == node.pf(), "incremental PF matches recomputation");
        NUMSG_ASSERT(node.type() == next.type, "each descent lowers type by 2");
        NUMSG_ASSERT(st.multiplicity == node.multiplicity(),
                     "tracked multiplicity matches");
        NUMSG_ASSERT(is_almost_symmetric(st), "descent node is almost symmetric");
      }
#endif
      return next;
    }

    std::vector<Level> levels_down_to(int             f,
                                      int             min_type,
                                      Executor const& executor) {
      std::vector<Level> levels;
      levels.push_back(root_level(f));
      while (levels.back().size() > 0 && levels.back().type >= 3
             && levels.back().type >= min_type + 2) {
        levels.push_back(next_level(levels.back(), executor));
      }
      NUMSG_ASSERT(levels.size() < 2 || levels[1].size() == 1,
                   "M(F) has the single child M(F) u {F - 1}");
      return levels;
    }

  }  // namespace

  DescendNode::DescendNode(BitTable gaps, BitTable pf, int multiplicity)
      : _gaps(std::move(gaps)),
        _pf(std::move(pf)),
        _multiplicity(multiplicity),
        _type(static_cast<int>(_pf.count())) {}

  DescendNode descend_root(int frobenius) {
    require_frobenius(frobenius);
    BitTable gaps(static_cast<std::size_t>(frobenius) + 1);
    for (int x = 1; x <= frobenius; ++x) {
      gaps.set(static_cast<std::size_t>(x));
    }
    BitTable pf = gaps;
    return DescendNode(std::move(gaps), std::move(pf), frobenius + 1);
  }

  bool descent_accepts(DescendNode const& node, int x) {
    int const f = node.frobenius();
    return x >= 1 && x < f && node.gap_bits().test(static_cast<std::size_t>(x))
           && passes(node.gap_bits().words(),
                     node.pf_bits().words(),
                     f,
                     static_cast<std::size_t>(x));
  }

  std::vector<DescendNode> descend_children(DescendNode const& node) {
    if (node.type() <= 2) {
      throw invalid_parameters("cannot descend below type 2, node has type "
                               + std::to_string(node.type()));
    }
    Level one;
    one.frobenius = node.frobenius();
    one.type      = node.type();
    one.width     = words_for(node.frobenius());
    one.push(node.gap_bits().words(), node.pf_bits().words(),
             node.multiplicity());
    auto const               next = next_level(one, sequential_executor());
    std::vector<DescendNode> out;
    for (std::size_t i = 0; i < next.size(); ++i) {
      out.push_back(next.node(i));
    }
    return out;
  }

  std::vector<std::vector<DescendNode>> descend_levels(
      int             frobenius,
      int             min_type,
      Executor const& executor) {
    std::vector<std::vector<DescendNode>> out;
    for (auto const& level : levels_down_to(frobenius, min_type, executor)) {
      auto& nodes = out.emplace_back();
      for (std::size_t i = 0; i < level.size(); ++i) {
        nodes.push_back(level.node(i));
      }
    }
    return out;
  }

  EnumerationResult as_down_to_type(int             frobenius,
                                    int             min_type,
                                    Executor const& executor) {
    require_frobenius(frobenius);
    if (min_type < 1 || min_type > frobenius) {
      throw invalid_parameters("type must satisfy 1 <= t <= F, found t = "
                               + std::to_string(min_type));
    }
    EnumerationResult result;
    if (frobenius <= 4) {
      auto small = oracle_as(frobenius);
      for (auto& s : small.semigroups) {
        if (compute_stats(s).type >= min_type) {
          result.semigroups.push_back(std::move(s));
        }
      }
      result.algorithm = Algorithm::oracle;
      return result;
    }
    result.algorithm  = Algorithm::descending;
    auto const levels = levels_down_to(frobenius, min_type, executor);
    result.depth      = levels.size() - 1;

    struct Ref {
      Level const* level;
      std::size_t  index;
    };
    std::vector<Ref> refs;
    for (auto const& level : levels) {
      for (std::size_t i = 0; i < level.size(); ++i) {
        refs.push_back({&level, i});
      }
    }
    // Every gap set has top bit F: the canonical order is decided by the
    // least element of the symmetric difference.
    std::sort(refs.begin(), refs.end(), [](Ref const& a, Ref const& b) {
      auto const x = a.level->gap_words(a.index);
      auto const y = b.level->gap_words(b.index);
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (Word const d = x[k] ^ y[k]; d != 0) {
          return (x[k] & (d & -d)) != 0;
        }
      }
      return false;
    });
    auto const n = static_cast<std::size_t>(frobenius) + 1;
    result.semigroups.reserve(refs.size());
    for (auto const& r : refs) {
      result.semigroups.push_back(Semigroup::from_trusted_gaps(
          BitTable(n, r.level->gap_words(r.index))));
    }
    canonicalize(result);
    NUMSG_ASSERT(result.duplicates == 0, "descent tree has no duplicates");
    return result;
  }

  EnumerationResult as_all_descending(int             frobenius,
                                      Executor const& executor) {
    return as_down_to_type(frobenius, 1, executor);
  }

}  // namespace numsg
