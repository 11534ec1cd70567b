// JSON-lines serialization of semigroups.
//
// One object per semigroup, fields in the fixed order
//   gaps, msg, pf, frobenius, genus, type, multiplicity
// with every array sorted ascending.

#ifndef NUMSG_SERIALIZE_HPP_
#define NUMSG_SERIALIZE_HPP_

#include <string>  // for string

#include "json.hpp"       // for ordered_json
#include "semigroup.hpp"  // for Semigroup, Stats

namespace numsg {

  nlohmann::ordered_json to_json(Semigroup const& s, Stats const& st);

  nlohmann::ordered_json to_json(Semigroup const& s);

  // Compact single-line form, no trailing newline.
  std::string to_json_line(Semigroup const& s);

}  // namespace numsg

#endif  // NUMSG_SERIALIZE_HPP_
