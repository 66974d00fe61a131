#include "cli/json_io.hpp"

#include <fstream>

namespace cartan::cli {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int decode_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

std::string encode(const Rat& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

Rat decode_rat(const json& j) {
  if (!j.is_string()) throw InputError("rational values must be \"p/q\" strings");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
  }
}

json encode(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(encode(r));
  return a;
}

std::vector<Rat> decode_vector(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(decode_rat(e));
  return v;
}

json encode(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat decode_mat(const json& j) {
  const int rows = decode_int(field(j, "rows"), "rows");
  const int cols = decode_int(field(j, "cols"), "cols");
  const json& entries = field(j, "entries");
  if (rows < 0 || cols < 0 || !entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
    throw InputError("matrix entries do not match the declared shape");
  Mat m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = decode_vector(entries[r]);
    if (row.size() != m.cols()) throw InputError("matrix row has the wrong length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = row[c];
  }
  return m;
}

json encode(const ModelTag& tag) {
  if (tag.kind() == ModelKind::Projective) return {{"model", "projective"}, {"m", tag.m()}};
  return {{"model", "conformal"}, {"p", tag.p()}, {"q", tag.q()}};
}

ModelTag decode_model(const json& j) {
  const json& kind = field(j, "model");
  if (!kind.is_string()) throw InputError("model must be a string");
  try {
    if (kind == "projective") return ModelTag::projective(decode_int(field(j, "m"), "m"));
    if (kind == "conformal") return ModelTag::conformal(decode_int(field(j, "p"), "p"), decode_int(field(j, "q"), "q"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown model \"" + kind.get<std::string>() + "\"");
}

json encode(const ModelPoint& x) { return encode(x.coords()); }
json encode(const GroupElement& g) { return encode(g.matrix()); }
json encode(const Symmetry& s) { return {{"center", encode(s.center)}, {"element", encode(s.element)}}; }
json encode(const Frame& u) { return {{"x", encode(u.base_x.grade_coords(-1))}, {"g0", encode(u.g0)}}; }

json encode(const AlgElement& a) {
  for (int grade : {-1, 0, 1})
    if (a.lies_in(grade) && !(grade == 0 && a.is_zero()))
      return {{"grade", grade}, {"coords", encode(a.grade_coords(grade))}};
  return {{"coords", encode(a.coords())}};
}

SymmetrySystem decode_system(const json& j) {
  const FlatModel model(decode_model(field(j, "model")));
  const std::size_t d = model.dimension();
  auto sized = [&](const json& v, const char* what) {
    auto out = decode_vector(v);
    if (out.size() != d) throw InputError(std::string(what) + " must have one entry per model dimension");
    return out;
  };
  const json& rule = field(j, "rule");
  try {
    if (rule == "conjugation") {
      Symmetry base = make_origin_symmetry(model, sized(field(j, "base_Z"), "base_Z"));
      if (j.contains("base_X")) base = transport(base, model.exp_minus(sized(j.at("base_X"), "base_X")));
      std::optional<GroupElement> frame;
      if (j.contains("frame_Z")) frame = model.exp_plus(sized(j.at("frame_Z"), "frame_Z"));
      return SymmetrySystem::conjugation(model, std::move(base), frame);
    }
    if (rule == "table") {
      const json& entries = field(j, "entries");
      if (!entries.is_array()) throw InputError("table entries must be an array");
      std::vector<Symmetry> table;
      for (const auto& e : entries)
        table.push_back({model.element(decode_mat(field(e, "element"))), model.point(decode_vector(field(e, "center")))});
      return SymmetrySystem::table(model, std::move(table));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  throw InputError("rule must be \"conjugation\" or \"table\"");
}

Cochain2 decode_cochain2(const json& j) {
  const AlgebraPtr alg = build_algebra(decode_model(field(j, "model")));
  Cochain2 k(alg);
  const json& values = field(j, "values");
  if (!values.is_array()) throw InputError("values must be an array");
  const std::size_t n = alg->dim_of(-1);
  for (const auto& v : values) {
    const json& pair = field(v, "pair");
    if (!pair.is_array() || pair.size() != 2) throw InputError("pair must be [i, j]");
    const int i = decode_int(pair[0], "pair index"), jj = decode_int(pair[1], "pair index");
    if (i < 0 || jj < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(jj) >= n || i == jj)
      throw InputError("pair indices must be distinct and below dim g_-1");
    auto coords = decode_vector(field(v, "coords"));
    if (coords.size() != alg->dim()) throw InputError("coords must have dim g entries");
    k.set(static_cast<std::size_t>(i), static_cast<std::size_t>(jj), AlgElement(alg, std::move(coords)));
  }
  return k;
}

json encode(const Cochain2& k) {
  json values = json::array();
  for (std::size_t p = 0; p < k.pair_count(); ++p) {
    const auto [i, j] = k.pair_at(p);
    values.push_back({{"pair", {i, j}}, {"coords", encode(k.stored(p))}});
  }
  return {{"model", encode(k.algebra().model())}, {"values", std::move(values)}};
}

json encode(const Cochain1& c) {
  json cols = json::array();
  for (std::size_t a = 0; a < c.values().cols(); ++a) cols.push_back(encode(c.values().column_vector(a)));
  return {{"columns", std::move(cols)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace cartan::cli
