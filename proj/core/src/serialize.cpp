#include "hopfalg/serialize.hpp"

#include "hopfalg/errors.hpp"
#include "json.hpp"

namespace hopfalg {

namespace {

using Json = nlohmann::ordered_json;
using S = ActionSelector;

constexpr S kSelectors[] = {S::sigma_left, S::sigma_right, S::tau_left, S::tau_right};

class Reader {
 public:
  explicit Reader(Field field) : field_(field) {}

  const Json& at(const Json& j, const char* key, const std::string& path) const {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(path + ": missing \"" + key + "\"");
    return j.at(key);
  }

  std::string text(const Json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError(path + ": expected a string");
    return j.get<std::string>();
  }

  std::size_t count(const Json& j, const std::string& path) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
      throw SchemaError(path + ": expected a nonnegative integer");
    return j.get<std::size_t>();
  }

  Scalar scalar(const Json& j, const std::string& path) const {
    if (j.is_number_integer()) return Scalar(field_, j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Scalar::parse(field_, std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
      try {
        return Scalar::parse(field_, j.get<std::string>());
      } catch (const ParseError& ex) {
        throw ParseError(path + ": " + ex.what());
      }
    }
    throw SchemaError(path + ": expected an integer or a \"num/den\" string");
  }

  Mat matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) const {
    if (!j.is_array() || j.size() != rows)
      throw SchemaError(path + ": expected " + std::to_string(rows) + " rows of " + std::to_string(cols));
    Mat m(field_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Json& row = j[r];
      if (!row.is_array() || row.size() != cols)
        throw SchemaError(path + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) {
        Scalar v = scalar(row[c], path);
        if (!v.is_zero()) m.set(r, c, v);
      }
    }
    return m;
  }

  Mat vector(const Json& j, std::size_t n, const std::string& path) const {
    if (!j.is_array() || j.size() != n) throw SchemaError(path + ": expected " + std::to_string(n) + " entries");
    Mat m(field_, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar v = scalar(j[i], path);
      if (!v.is_zero()) m.set(i, 0, v);
    }
    return m;
  }

  ActionFamily family(const Json& j, std::size_t n, std::size_t dim, const std::string& path) const {
    if (!j.is_array() || j.size() != n)
      throw SchemaError(path + ": expected one matrix per algebra basis element (" + std::to_string(n) + ")");
    ActionFamily f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(matrix(j[i], dim, dim, path + "[" + std::to_string(i) + "]"));
    return f;
  }

 private:
  Field field_;
};

Field parse_field(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw SchemaError("field: missing \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "q") return Field::rationals();
  if (kind == "gf") {
    if (!j.contains("p") || !j.at("p").is_number_integer()) throw SchemaError("field: gf needs an integer \"p\"");
    std::int64_t p = j.at("p").get<std::int64_t>();
    if (!is_prime_number(p)) throw SchemaError("field: p = " + std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  throw SchemaError("field: kind must be \"gf\" or \"q\"");
}

AlgebraPtr parse_algebra(const Reader& rd, const Field& field, const Json& j) {
  const std::size_t n = rd.count(rd.at(j, "dim", "algebra"), "algebra.dim");
  if (n == 0) throw SchemaError("algebra.dim must be positive");
  Mat unit = rd.vector(rd.at(j, "unit", "algebra"), n, "algebra.unit");
  const Json& mul = rd.at(j, "mul", "algebra");
  if (!mul.is_array() || mul.size() != n) throw SchemaError("algebra.mul: expected n x n x n");
  std::vector<std::vector<Mat>> prod(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mul[i].is_array() || mul[i].size() != n) throw SchemaError("algebra.mul: expected n x n x n");
    for (std::size_t k = 0; k < n; ++k)
      prod[i].push_back(rd.vector(mul[i][k], n, "algebra.mul[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return std::make_shared<const Algebra>(field, n, prod, unit);
}

DoubleBimodule parse_module(const Reader& rd, const AlgebraPtr& r, const Json& j, const std::string& path) {
  const std::size_t dim = rd.count(rd.at(j, "dim", path), path + ".dim");
  DoubleBimodule m(r, dim);
  for (auto sel : kSelectors) {
    const char* key = selector_name(sel);
    if (j.contains(key)) m.set(sel, rd.family(j.at(key), r->dim(), dim, path + "." + key));
  }
  return m;
}

std::vector<DualEntry> parse_dual_table(const Reader& rd, const Json& j, const Presentation& p, const char* what) {
  std::vector<DualEntry> out;
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
  const std::size_t du = p.object(p.unit_object).module.dim;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string path = std::string(what) + "[" + std::to_string(i) + "]";
    DualEntry d;
    d.object = rd.text(rd.at(j[i], "object", path), path + ".object");
    d.dual = rd.text(rd.at(j[i], "dual", path), path + ".dual");
    const std::size_t a = p.object(d.object).module.dim, b = p.object(d.dual).module.dim;
    d.ev = rd.matrix(rd.at(j[i], "ev", path), du, a * b, path + ".ev");
    d.db = rd.matrix(rd.at(j[i], "db", path), a * b, du, path + ".db");
    out.push_back(std::move(d));
  }
  return out;
}

Presentation parse_presentation(const Reader& rd, const Document& doc, const Json& j) {
  Presentation p;
  p.algebra = doc.algebra;
  auto module_named = [&](const std::string& name, const std::string& path) -> const DoubleBimodule& {
    for (const auto& [key, m] : doc.modules)
      if (key == name) return m;
    throw SchemaError(path + ": unknown module " + name);
  };
  const Json& objs = j.at("objects");
  if (!objs.is_array()) throw SchemaError("objects: expected an array");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    std::string path = "objects[" + std::to_string(i) + "]";
    std::string name = rd.text(rd.at(objs[i], "name", path), path + ".name");
    const DoubleBimodule& m = module_named(rd.text(rd.at(objs[i], "module", path), path + ".module"), path);
    if (!m.has(S::tau_left) || !m.has(S::tau_right))
      throw SchemaError(path + ": the module of an object needs tau_left and tau_right");
    if (p.object_index(name)) throw SchemaError(path + ": duplicate object " + name);
    p.objects.push_back({name, m.tau_pair()});
  }
  auto dim_of = [&](const std::string& name, const std::string& path) {
    auto i = p.object_index(name);
    if (!i) throw SchemaError(path + ": unknown object " + name);
    return p.objects[*i].module.dim;
  };
  if (j.contains("morphisms")) {
    const Json& ms = j.at("morphisms");
    if (!ms.is_array()) throw SchemaError("morphisms: expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::string path = "morphisms[" + std::to_string(i) + "]";
      PresentationMorphism m;
      m.name = rd.text(rd.at(ms[i], "name", path), path + ".name");
      m.src = rd.text(rd.at(ms[i], "src", path), path + ".src");
      m.dst = rd.text(rd.at(ms[i], "dst", path), path + ".dst");
      m.matrix = rd.matrix(rd.at(ms[i], "matrix", path), dim_of(m.dst, path), dim_of(m.src, path), path + ".matrix");
      for (const auto& e : p.morphisms)
        if (e.name == m.name) throw SchemaError(path + ": duplicate morphism " + m.name);
      p.morphisms.push_back(std::move(m));
    }
  }
  if (j.contains("tensor")) {
    const Json& ts = j.at("tensor");
    if (!ts.is_array()) throw SchemaError("tensor: expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::string path = "tensor[" + std::to_string(i) + "]";
      TensorEntry t;
      t.left = rd.text(rd.at(ts[i], "left", path), path + ".left");
      t.right = rd.text(rd.at(ts[i], "right", path), path + ".right");
      t.result = rd.text(rd.at(ts[i], "result", path), path + ".result");
      t.theta = rd.matrix(rd.at(ts[i], "theta", path), dim_of(t.result, path),
                          dim_of(t.left, path) * dim_of(t.right, path), path + ".theta");
      p.tensor.push_back(std::move(t));
    }
  }
  p.unit_object = rd.text(rd.at(j, "unit_object", "document"), "unit_object");
  p.unit_iso = rd.matrix(rd.at(j, "unit_iso", "document"), p.algebra->dim(), dim_of(p.unit_object, "unit_object"),
                         "unit_iso");
  if (j.contains("duals")) p.duals = parse_dual_table(rd, j.at("duals"), p, "duals");
  if (j.contains("right_duals")) p.right_duals = parse_dual_table(rd, j.at("right_duals"), p, "right_duals");
  return p;
}

StructureData parse_structure(const Reader& rd, const AlgebraPtr& r, const Json& j) {
  const std::size_t n = r->dim();
  const std::size_t dl = rd.count(rd.at(j, "dim_L", "coend"), "coend.dim_L");
  StructureData s;
  s.carrier = DoubleBimodule(r, dl);
  if (j.contains("actions")) {
    const Json& acts = j.at("actions");
    for (auto sel : kSelectors) {
      const char* key = selector_name(sel);
      s.carrier.set(sel, rd.family(rd.at(acts, key, "coend.actions"), n, dl, std::string("coend.actions.") + key));
    }
  } else if (n == 1) {
    for (auto sel : kSelectors) s.carrier.set(sel, ActionFamily{Mat::identity(r->field(), dl)});
  } else {
    throw SchemaError("coend: \"actions\" is required unless the algebra is the ground field");
  }
  s.coproduct = rd.matrix(rd.at(j, "coproduct", "coend"), dl * dl, dl, "coend.coproduct");
  s.counit = rd.matrix(rd.at(j, "counit", "coend"), n, dl, "coend.counit");
  if (j.contains("product")) s.product = rd.matrix(j.at("product"), dl, dl * dl, "coend.product");
  if (j.contains("unit")) s.unit = rd.matrix(j.at("unit"), dl, n * n, "coend.unit");
  if (j.contains("antipode")) s.antipode = rd.matrix(j.at("antipode"), dl * dl, dl, "coend.antipode");
  if (j.contains("opposite_antipode"))
    s.opposite_antipode = rd.matrix(j.at("opposite_antipode"), dl * dl, dl, "coend.opposite_antipode");
  return s;
}

Json scalar_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  const mpq_class& q = s.rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Mat& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(scalar_json(v.at(i, 0)));
  return out;
}

Json family_json(const ActionFamily& f) {
  Json out = Json::array();
  for (const auto& m : f) out.push_back(matrix_json(m));
  return out;
}

Json field_json(const Field& f) {
  Json j = Json::object();
  if (f.is_prime()) {
    j["kind"] = "gf";
    j["p"] = f.characteristic();
  } else {
    j["kind"] = "q";
  }
  return j;
}

Json algebra_json(const Algebra& a) {
  Json j = Json::object();
  j["dim"] = a.dim();
  j["unit"] = vector_json(a.unit());
  Json mul = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vector_json(a.product(i, k)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  return j;
}

Json module_json(const DoubleBimodule& m) {
  Json j = Json::object();
  j["dim"] = m.dim();
  for (auto sel : kSelectors)
    if (m.has(sel)) j[selector_name(sel)] = family_json(m.family(sel));
  return j;
}

Json dual_table_json(const std::vector<DualEntry>& table) {
  Json out = Json::array();
  for (const auto& d : table) {
    Json e = Json::object();
    e["object"] = d.object;
    e["dual"] = d.dual;
    e["ev"] = matrix_json(d.ev);
    e["db"] = matrix_json(d.db);
    out.push_back(std::move(e));
  }
  return out;
}

void write_presentation(Json& j, const Presentation& p) {
  Json ms = Json::array();
  for (const auto& m : p.morphisms) {
    if (m.origin != MorphismOrigin::generator) continue;
    Json e = Json::object();
    e["name"] = m.name;
    e["src"] = m.src;
    e["dst"] = m.dst;
    e["matrix"] = matrix_json(m.matrix);
    ms.push_back(std::move(e));
  }
  j["morphisms"] = std::move(ms);
  Json ts = Json::array();
  for (const auto& t : p.tensor) {
    Json e = Json::object();
    e["left"] = t.left;
    e["right"] = t.right;
    e["result"] = t.result;
    e["theta"] = matrix_json(t.theta);
    ts.push_back(std::move(e));
  }
  j["tensor"] = std::move(ts);
  j["duals"] = dual_table_json(p.duals);
  j["right_duals"] = dual_table_json(p.right_duals);
  j["unit_object"] = p.unit_object;
  j["unit_iso"] = matrix_json(p.unit_iso);
}

Json actions_json(const DoubleBimodule& m) {
  Json j = Json::object();
  for (auto sel : kSelectors) j[selector_name(sel)] = family_json(m.family(sel));
  return j;
}

Json structure_json(const StructureData& s) {
  Json j = Json::object();
  j["dim_L"] = s.carrier.dim();
  j["actions"] = actions_json(s.carrier);
  j["coproduct"] = matrix_json(s.coproduct);
  j["counit"] = matrix_json(s.counit);
  if (s.product) j["product"] = matrix_json(*s.product);
  if (s.unit) j["unit"] = matrix_json(*s.unit);
  if (s.antipode) j["antipode"] = matrix_json(*s.antipode);
  if (s.opposite_antipode) j["opposite_antipode"] = matrix_json(*s.opposite_antipode);
  return j;
}

Json coend_json(const Reconstruction& r) {
  const CoendResult& c = r.coend;
  Json j = Json::object();
  j["dim_L"] = c.dim();
  j["ambient_dim"] = c.ambient_dim;
  Json used = Json::array();
  for (const auto& m : r.presentation.morphisms) used.push_back(m.name);
  j["morphisms_used"] = std::move(used);
  j["actions"] = actions_json(c.carrier);
  Json maps = Json::object();
  for (std::size_t x = 0; x < c.names.size(); ++x) maps[c.names[x]] = matrix_json(c.class_maps[x]);
  j["class_maps"] = std::move(maps);
  j["coproduct"] = matrix_json(r.coring->coproduct_flat());
  j["counit"] = matrix_json(r.coring->counit);
  j["product"] = matrix_json(r.structure->product_flat());
  j["unit"] = matrix_json(r.structure->unit);
  if (r.antipode) j["antipode"] = matrix_json(r.antipode->nabla_flat());
  if (r.opposite_antipode) j["opposite_antipode"] = matrix_json(r.opposite_antipode->nabla_flat());
  if (r.roundtrip) {
    Json rt = Json::object();
    rt["dim_original"] = r.roundtrip->dim_original;
    rt["dim_rebuilt"] = r.roundtrip->dim_rebuilt;
    rt["rank"] = r.roundtrip->rank;
    rt["iso"] = r.roundtrip->iso();
    j["roundtrip"] = std::move(rt);
  }
  return j;
}

Json dual_json(const DualData& d) {
  Json j = Json::object();
  j["dim"] = d.dual_dim();
  if (d.dual.left) j["left"] = family_json(*d.dual.left);
  if (d.dual.right) j["right"] = family_json(*d.dual.right);
  Json fs = Json::array();
  for (const auto& f : d.functionals) fs.push_back(matrix_json(f));
  j["functionals"] = std::move(fs);
  j["dual_basis"] = matrix_json(d.dual_basis);
  return j;
}

Json report_object(const Report& rep) {
  Json j = Json::object();
  j["ok"] = rep.ok();
  Json entries = Json::array();
  for (const auto& e : rep.entries()) {
    Json x = Json::object();
    x["tag"] = e.tag;
    x["status"] = e.pass ? "pass" : "fail";
    if (!e.pass) x["counterexample"] = e.counterexample;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace

Document parse_document(std::string_view text, std::optional<Field> field) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw SchemaError("document: expected a JSON object");
  Document doc;
  try {
    if (field) {
      doc.field = *field;
    } else if (j.contains("field")) {
      doc.field = parse_field(j.at("field"));
    } else {
      throw SchemaError("document: no \"field\" and no --field given");
    }
    Reader rd(doc.field);
    if (!j.contains("algebra")) throw SchemaError("document: missing \"algebra\"");
    doc.algebra = parse_algebra(rd, doc.field, j.at("algebra"));
    if (j.contains("modules")) {
      const Json& ms = j.at("modules");
      if (!ms.is_object()) throw SchemaError("modules: expected an object");
      for (const auto& [name, m] : ms.items()) doc.modules.emplace_back(name, parse_module(rd, doc.algebra, m, "modules." + name));
    }
    if (j.contains("objects")) doc.presentation = parse_presentation(rd, doc, j);
    if (j.contains("coend")) doc.structure = parse_structure(rd, doc.algebra, j.at("coend"));
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(std::string("document: ") + ex.what());
  } catch (const DimensionError& ex) {
    throw SchemaError(std::string("document: ") + ex.what());
  }
  return doc;
}

std::string write_document(const OutputParts& parts) {
  Json j = Json::object();
  if (parts.input) {
    const Document& d = *parts.input;
    j["field"] = field_json(d.field);
    j["algebra"] = algebra_json(*d.algebra);
    Json ms = Json::object();
    for (const auto& [name, m] : d.modules) ms[name] = module_json(m);
    j["modules"] = std::move(ms);
    if (d.presentation) {
      Json objs = Json::array();
      for (const auto& o : d.presentation->objects) {
        std::string module_name;
        for (const auto& [name, m] : d.modules) {
          if (m.dim() == o.module.dim && m.has(S::tau_left) && m.family(S::tau_left) == *o.module.left &&
              m.family(S::tau_right) == *o.module.right) {
            module_name = name;
            break;
          }
        }
        objs.push_back(Json{{"name", o.name}, {"module", module_name}});
      }
      j["objects"] = std::move(objs);
      write_presentation(j, *d.presentation);
    }
    if (d.structure && !parts.reconstruction) j["coend"] = structure_json(*d.structure);
  }
  if (parts.reconstruction && parts.reconstruction->structure) j["coend"] = coend_json(*parts.reconstruction);
  if (!parts.duals.empty()) {
    Json ds = Json::object();
    for (const auto& d : parts.duals) {
      Json e = Json::object();
      if (d.left) e["left_dual"] = dual_json(*d.left);
      if (d.right) e["right_dual"] = dual_json(*d.right);
      ds[d.module] = std::move(e);
    }
    j["dual_modules"] = std::move(ds);
  }
  if (parts.report) j["report"] = report_object(*parts.report);
  return j.dump(2) + "\n";
}

std::string report_json(const Report& report) { return report_object(report).dump(2) + "\n"; }

CoalgebroidPtr structure_coalgebroid(const Document& d) {
  if (!d.structure) throw SchemaError("document: missing \"coend\"");
  const StructureData& s = *d.structure;
  return std::make_shared<const Coalgebroid>(Coalgebroid::make(s.carrier, s.coproduct, s.counit));
}

BialgebroidPtr structure_bialgebroid(const Document& d, const CoalgebroidPtr& base) {
  if (!d.structure || !d.structure->product || !d.structure->unit)
    throw SchemaError("coend: \"product\" and \"unit\" are required");
  return std::make_shared<const Bialgebroid>(Bialgebroid::make(base, *d.structure->product, *d.structure->unit));
}

}  // namespace hopfalg
