#include "bertini/pencil_io.hpp"

#include <fstream>

#include <json.hpp>

namespace bertini {

LoadedPencil load_pencil_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pencil file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pencil file is not valid JSON: ") + e.what());
  }

  LoadedPencil out;
  if (j.contains("field")) {
    if (!j["field"].contains("prime") || !j["field"]["prime"].is_string())
      throw ParseError("field block needs a \"prime\" string");
    Rat p = rat_parse(j["field"]["prime"].get<std::string>());
    if (mpz_cmp_ui(p.get_den().get_mpz_t(), 1) != 0 || !p.get_num().fits_ulong_p())
      throw ParseError("prime must be a positive 64-bit integer");
    out.prime = p.get_num().get_ui();
    if (!is_prime_u64(out.prime)) throw ParseError("field modulus is not prime");
    out.modular = true;
  }

  static const char* keys[7] = {"a1", "a2", "b1", "b2", "b3", "c1", "c2"};
  std::array<Rat, 14> vals;
  for (int block = 0; block < 2; ++block) {
    const char* bname = block == 0 ? "w" : "wp";
    if (!j.contains(bname) || !j[bname].is_object())
      throw ParseError(std::string("missing block: ") + bname);
    for (int i = 0; i < 7; ++i) {
      if (!j[bname].contains(keys[i]))
        throw ParseError(std::string(bname) + " block is missing " + keys[i]);
      if (!j[bname][keys[i]].is_string())
        throw ParseError("coefficient values must be strings, found a non-string at " +
                         std::string(bname) + "." + keys[i]);
      vals[7 * block + i] = rat_parse(j[bname][keys[i]].get<std::string>());
    }
  }

  if (out.modular) {
    std::array<Fp, 14> fv;
    for (int i = 0; i < 14; ++i) fv[i] = fp_from_rat(vals[i], out.prime);
    out.fp = PencilSpec<Fp>::from_values(fv);
  } else {
    out.rat = PencilSpec<Rat>::from_values(vals);
  }
  return out;
}

}  // namespace bertini
