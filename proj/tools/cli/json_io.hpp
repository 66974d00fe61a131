#pragma once

#include <json.hpp>

#include <cartankit/graded.hpp>
#include <cartankit/nonhomog.hpp>
#include <cartankit/symmetries.hpp>
#include <cartankit/weyl.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cartan::cli {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals are encoded as "p/q" strings, always with an explicit
// denominator; decoding also accepts a bare integer string.
std::string encode(const Rat& r);
Rat decode_rat(const json& j);

json encode(const std::vector<Rat>& v);
std::vector<Rat> decode_vector(const json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
json encode(const Mat& m);
Mat decode_mat(const json& j);

json encode(const ModelTag& tag);
ModelTag decode_model(const json& j);

json encode(const ModelPoint& x);
json encode(const GroupElement& g);
json encode(const Symmetry& s);
/// Frame as {"x": [...], "g0": Mat}.
json encode(const Frame& u);
/// Element restricted to one grade: {"grade": i, "coords": [...]}, or the
/// full coordinate vector when mixed.
json encode(const AlgElement& a);

/// System descriptor:
///   {"model": {...}, "rule": "conjugation", "base_Z": [...],
///    "base_X": [...] (optional), "frame_Z": [...] (optional)}
///   {"model": {...}, "rule": "table",
///    "entries": [{"center": [homogeneous], "element": Mat}, ...]}
SymmetrySystem decode_system(const json& j);

/// {"model": {...}, "values": [{"pair": [i, j], "coords": [...]}, ...]}
Cochain2 decode_cochain2(const json& j);
json encode(const Cochain2& k);
json encode(const Cochain1& c);

json load_json_file(const std::string& path);

}  // namespace cartan::cli
