#include "numsg/enumeration.hpp"

#include <algorithm>   // for adjacent_find, sort, unique
#include <functional>  // for greater_equal

namespace numsg {

  std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
      case Algorithm::irreducible:
        return "irreducible";
      case Algorithm::ascending:
        return "ascending";
      case Algorithm::descending:
        return "descending";
      case Algorithm::oracle:
        return "oracle";
    }
    return "unknown";
  }

  void canonicalize(EnumerationResult& result) {
    auto& v = result.semigroups;
    if (std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end()) {
      return;
    }
    std::sort(v.begin(), v.end());
    auto const last = std::unique(v.begin(), v.end());
    result.duplicates += static_cast<std::size_t>(v.end() - last);
    v.erase(last, v.end());
  }

}  // namespace numsg
