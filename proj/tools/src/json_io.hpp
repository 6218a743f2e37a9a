#pragma once

#include "json.hpp"

#include "qca/bases.hpp"
#include "qca/characters.hpp"
#include "qca/mutation.hpp"
#include "qca/tsystem.hpp"

namespace qca::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const Quiver& q);
json to_json(const IceQuiver& q);
// Accepts {"n","arrows"} with optional "m" == n and "frozen_from": null.
Quiver quiver_from_json(const json& j);

json to_json(const VPoly& p);
VPoly vpoly_from_json(const json& j);
json to_json(const TorusElement& x);
TorusElement torus_from_json(const json& j, int rank);

json to_json(const GradedVector& g);  // integer degrees only
json to_json(const WVector& w);
WVector wvector_from_json(const json& j);
// "i:a:val,..." e.g. "1:-1:1,2:0:1"
WVector parse_wvector(const std::string& text);

json to_json(const YPolynomial& y);
json to_json(const RationalRep& m);
RationalRep rep_from_json(const json& j, const Quiver& q);
json to_json(const K0Class& c);

Setting parse_setting(const std::string& s);
std::string setting_name(Setting s);

// Everything needed to rebuild a seed: quiver, level, setting and the mutation word.
struct SeedConfig {
  Quiver quiver;
  int level = 1;
  Setting setting = Setting::EPrime;
};
QuantumSeed initial_seed_for(const SeedConfig& c);

json seed_to_json(const SeedConfig& c, const QuantumSeed& s);
// Replays the stored word and checks the stored matrices and variables; rejects other schema versions.
std::pair<SeedConfig, QuantumSeed> seed_from_json(const json& j);
json config_to_json(const SeedConfig& c);
SeedConfig config_from_json(const json& j);
void check_schema(const json& j);

json to_json(const GVector& g);
json to_json(const ExplorationGraph& g);
json to_json(const TSystemReport& r);
json to_json(const LPermutationReport& r);
json to_json(const BasisContext::Term& t);
json to_json(const StructureConstant& s);
json error_json(const std::string& code, const std::string& message);

}  // namespace qca::io
