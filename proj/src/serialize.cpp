#include "numsg/serialize.hpp"

namespace numsg {

  nlohmann::ordered_json to_json(Semigroup const& s, Stats const& st) {
    nlohmann::ordered_json j;
    j["gaps"]         = s.gaps();
    j["msg"]          = st.msg;
    j["pf"]           = st.pf;
    j["frobenius"]    = st.frobenius;
    j["genus"]        = st.genus;
    j["type"]         = st.type;
    j["multiplicity"] = st.multiplicity;
    return j;
  }

  nlohmann::ordered_json to_json(Semigroup const& s) {
    return to_json(s, compute_stats(s));
  }

  std::string to_json_line(Semigroup const& s) {
    return to_json(s).dump();
  }

}  // namespace numsg
