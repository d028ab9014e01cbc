#include "wdec/report.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace wdec {

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const std::vector<Vec>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Json to_json(const MatrixQ& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json structure_to_json(const Algebra& a) {
  Json j = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const SparseRow& row = a.product(i, k);
      for (std::size_t t = 0; t < row.idx.size(); ++t)
        j.push_back(Json::array({i + 1, k + 1, row.idx[t] + 1, to_string(row.val[t])}));
    }
  return j;
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw Error(ErrorKind::input, "expected a rational as a string or integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::input, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t limit, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::input, std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > limit) {
    throw Error(ErrorKind::input, std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::input, "expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

std::vector<Vec> vecs_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::input, "expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& x : j) out.push_back(vec_from_json(x));
  return out;
}

MatrixQ matrix_from_json(const Json& j) {
  std::vector<Vec> rows = vecs_from_json(j);
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorKind::input, "ragged matrix");
  return MatrixQ::from_rows(rows, cols);
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["dim"] = a.dim();
  j["one"] = a.one() ? to_json(*a.one()) : Json(nullptr);
  j["labels"] = a.labels() ? Json(*a.labels()) : Json(nullptr);
  j["structure"] = structure_to_json(a);
  return j;
}

Algebra algebra_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw Error(ErrorKind::input, "'dim' must be a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  Algebra a(n);
  const Json& s = field(j, "structure");
  if (!s.is_array()) throw Error(ErrorKind::input, "'structure' must be an array");
  for (const auto& e : s) {
    if (!e.is_array() || e.size() != 4) throw Error(ErrorKind::input, "structure entries are [i, j, k, \"c\"]");
    a.add_constant(index_from_json(e[0], n, "i"), index_from_json(e[1], n, "j"), index_from_json(e[2], n, "k"),
                   rational_from_json(e[3]));
  }
  if (j.contains("one") && !j.at("one").is_null()) {
    Vec one = vec_from_json(j.at("one"));
    if (one.size() != n) throw Error(ErrorKind::input, "'one' has the wrong length");
    a.set_one(one);
  }
  if (j.contains("labels") && !j.at("labels").is_null()) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw Error(ErrorKind::input, "'labels' has the wrong length");
    a.set_labels(labels);
  }
  return a;
}

Json table_to_json(const MultiplicationTable& t) {
  Json j;
  j["order"] = t.order;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.order; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.order; ++k) row.push_back(t(i, k) + 1);
    rows.push_back(row);
  }
  j["table"] = rows;
  return j;
}

MultiplicationTable table_from_json(const Json& j) {
  const Json& order = field(j, "order");
  if (!order.is_number_integer() || order.get<long long>() < 1) throw Error(ErrorKind::input, "'order' must be a positive integer");
  MultiplicationTable t;
  t.order = order.get<std::size_t>();
  const Json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != t.order) throw Error(ErrorKind::input, "'table' must have 'order' rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != t.order) throw Error(ErrorKind::input, "'table' rows must have 'order' entries");
    for (const auto& x : row) t.mu.push_back(index_from_json(x, t.order, "table entry"));
  }
  return t;
}

InputData input_from_json(const Json& j, Json descriptor) {
  InputData in;
  in.descriptor = std::move(descriptor);
  if (j.is_object() && j.contains("table")) {
    in.table = table_from_json(j);
    in.algebra = table_algebra(*in.table);
  } else if (j.is_object() && j.contains("structure")) {
    in.algebra = algebra_from_json(j);
  } else {
    throw Error(ErrorKind::input, "input is neither a table nor an algebra");
  }
  return in;
}

InputData input_from_family(const std::string& family, std::size_t n) {
  Family f = parse_family(family);
  InputData in;
  in.descriptor = {{"family", family_name(f)}, {"n", n}};
  in.table = table_of(generate(f, n));
  in.algebra = table_algebra(*in.table);
  return in;
}

InputData input_from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::input, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::input, "'" + path + "' is not valid JSON: " + e.what());
  }
  return input_from_json(j, Json{{"file", path}});
}

Decomposition run_pipeline(const InputData& in, const PipelineOptions& opt) {
  return in.table ? decompose_table(*in.table, opt) : decompose(in.algebra, std::nullopt, opt);
}

Json report_json(const Decomposition& d, const InputData& in, const PipelineOptions& opt) {
  Json r;
  r["input"] = in.descriptor;
  r["seed"] = opt.seed;
  r["options"] = {{"kronecker_max_degree", opt.kronecker_max_degree},
                  {"primitive_trials", opt.primitive_trials},
                  {"lift", opt.lift}};
  r["identity_adjoined"] = d.identity_adjoined;
  r["summary"] = d.summary();

  Json dims;
  dims["A"] = d.algebra.dim();
  if (d.radical) {
    dims["R"] = d.radical->dim();
    dims["Q"] = d.radical->quotient.algebra.dim();
  }
  if (d.center) dims["Z"] = d.center->dim();
  r["dims"] = dims;
  r["component_sizes"] = d.component_sizes();

  if (d.radical) {
    const auto& rad = *d.radical;
    r["radical"] = {{"radical_dim", rad.dim()},
                    {"radical_basis", to_json(rad.canonical_basis)},
                    {"reduced_basis", to_json(rad.reduced_basis())},
                    {"quotient_dim", rad.quotient.algebra.dim()},
                    {"quotient_basis", Json(rad.quotient.ideal.complement)},
                    {"quotient_relations", structure_to_json(rad.quotient.algebra)}};
    Json& qb = r["radical"]["quotient_basis"];
    for (auto& x : qb) x = x.get<std::size_t>() + 1;
  }
  if (d.center) {
    r["center"] = {{"center_dim", d.center->dim()},
                   {"center_basis", to_json(d.center->basis)},
                   {"center_structure", structure_to_json(d.center->structure)},
                   {"center_identity", d.center->identity ? to_json(*d.center->identity) : Json(nullptr)}};
  }
  if (d.split) {
    Json comps = Json::array();
    Json z = Json::array();
    for (const auto& leaf : d.split->components) {
      Json c = {{"center_degree", leaf.degree()},
                {"center_min_poly", to_json(leaf.min_poly.coeffs())},
                {"status", to_string(leaf.status)}};
      if (!leaf.note.empty()) c["note"] = leaf.note;
      comps.push_back(c);
      z.push_back(to_json(leaf.idempotent));
    }
    r["split"] = {{"idempotents", to_json(d.idempotents)}, {"idempotents_z", z}, {"components", comps}};
  }
  if (!d.components.empty()) {
    Json comps = Json::array();
    for (std::size_t k = 0; k < d.components.size(); ++k) {
      const auto& c = d.components[k];
      Json cj = {{"status", to_string(c.status)},
                 {"dim", c.basis.size()},
                 {"center_degree", c.center_degree},
                 {"q", c.q},
                 {"idempotent", to_json(c.idempotent)},
                 {"basis", to_json(c.basis)},
                 {"left_ideal", to_json(c.left_ideal)},
                 {"matrix_units", to_json(c.units)}};
      if (d.reps && c.status == ComponentStatus::split) {
        Json rep = Json::object();
        for (std::size_t i = 0; i < d.reps->rep[k].size(); ++i)
          rep["a_" + std::to_string(i + 1)] = to_json(d.reps->rep[k][i]);
        cj["rep"] = rep;
      }
      if (!c.note.empty()) cj["note"] = c.note;
      comps.push_back(cj);
    }
    r["wedderburn"] = {{"components", comps}};
    if (d.reps) {
      r["wedderburn"]["M"] = to_json(d.reps->m);
      r["wedderburn"]["M_inverse"] = to_json(d.reps->m_inv);
    }
  }
  if (d.lift) {
    Json values = Json::object();
    for (const auto& [name, v] : d.lift->values) values[name] = to_string(v);
    r["lift"] = {{"stages", d.lift->stages},
                 {"params_free", d.lift->params_free},
                 {"params", d.lift->param_names},
                 {"values", values},
                 {"basis", to_json(d.lift->basis)}};
  } else {
    r["lift"] = nullptr;
  }
  Json errors = Json::array();
  for (const auto& e : d.errors) errors.push_back({{"stage", e.stage}, {"kind", to_string(e.kind)}, {"message", e.message}});
  r["errors"] = errors;
  return r;
}

namespace {

std::string vec_text(const Vec& v, const char* var) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational mag = abs(v[i]);
    if (s.empty()) {
      if (sgn(v[i]) < 0) s += "-";
    } else {
      s += sgn(v[i]) < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + "*";
    s += var + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string report_text(const Decomposition& d) {
  std::ostringstream os;
  os << d.summary() << "\n";
  if (d.identity_adjoined) os << "identity adjoined as basis element " << d.algebra.dim() << "\n";
  if (d.radical) {
    os << "radical: dimension " << d.radical->dim() << "\n";
    for (const auto& z : d.radical->reduced_basis()) os << "  " << vec_text(z, "a") << "\n";
  }
  if (d.center) os << "center: dimension " << d.center->dim() << "\n";
  for (std::size_t k = 0; k < d.idempotents.size(); ++k)
    os << "e" << k + 1 << " = " << vec_text(d.idempotents[k], "b") << "\n";
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const auto& c = d.components[k];
    os << "component " << k + 1 << ": " << to_string(c.status) << ", dimension " << c.basis.size();
    if (c.status == ComponentStatus::split) os << ", q = " << c.q;
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
    for (std::size_t i = 0; i < c.q; ++i)
      for (std::size_t j = 0; j < c.q; ++j)
        os << "  E" << i + 1 << j + 1 << " = " << vec_text(c.units[i * c.q + j], "b") << "\n";
  }
  if (d.lift) {
    os << "lift: " << d.lift->stages << " stage(s), " << d.lift->params_free << " free parameter(s)\n";
    for (const auto& v : d.lift->basis) os << "  " << vec_text(v, "a") << "\n";
  }
  for (const auto& e : d.errors) os << "error [" << e.stage << "] " << to_string(e.kind) << ": " << e.message << "\n";
  return os.str();
}

namespace {

struct Checker {
  std::vector<CheckResult> results;

  template <class F>
  void run(const std::string& name, F&& body) {
    CheckResult c{name, true, ""};
    try {
      if (auto bad = body()) {
        c.ok = false;
        c.detail = *bad;
      }
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    results.push_back(std::move(c));
  }
};

using Fail = std::optional<std::string>;

}  // namespace

std::vector<CheckResult> verify_report(const Json& report, const InputData& in) {
  Checker ck;
  Algebra a = in.algebra;
  const bool adjoined = report.value("identity_adjoined", false);
  const std::size_t n0 = a.dim();
  if (adjoined) {
    a = adjoin_identity(a);
  } else if (!a.one()) {
    if (auto one = find_identity(a)) a.set_one(one);
  }

  bool dims_ok = true;
  ck.run("dimensions", [&]() -> Fail {
    const Json& dims = field(report, "dims");
    std::size_t da = field(dims, "A").get<std::size_t>();
    if (da != a.dim()) {
      dims_ok = false;
      return "report is for an algebra of dimension " + std::to_string(da) + ", input has " + std::to_string(a.dim());
    }
    if (!dims.contains("R") || !dims.contains("Q")) return "radical dimensions missing";
    std::size_t dr = dims.at("R").get<std::size_t>(), dq = dims.at("Q").get<std::size_t>();
    if (dr + dq != da) return "dim A != dim R + dim Q";
    if (report.contains("wedderburn")) {
      std::size_t total = 0;
      for (const auto& c : report.at("wedderburn").at("components")) total += c.at("dim").get<std::size_t>();
      if (total != dq) return "component dimensions do not add up to dim Q";
    }
    if (dims.contains("Z") && report.contains("split") &&
        report.at("split").at("idempotents").size() != dims.at("Z").get<std::size_t>()) {
      return "number of idempotents differs from dim Z";
    }
    return std::nullopt;
  });
  if (!dims_ok) return ck.results;

  ck.run("stage errors", [&]() -> Fail {
    if (report.contains("errors") && !report.at("errors").empty()) return report.at("errors")[0].dump();
    return std::nullopt;
  });

  if (!report.contains("radical")) return ck.results;
  std::vector<Vec> radical = vecs_from_json(report.at("radical").at("radical_basis"));
  RadicalData rad;
  rad.canonical_basis = radical;

  ck.run("radical trace condition", [&]() -> Fail {
    const Vec traces = basis_traces(a);
    auto trace_of = [&](const Vec& x) {
      Rational s = 0;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (sgn(x[k]) != 0) s += x[k] * traces[k];
      return s;
    };
    for (std::size_t r = 0; r < radical.size(); ++r)
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (sgn(trace_of(right_basis_multiply(a, radical[r], i))) != 0)
          return "trace(L(x a_" + std::to_string(i + 1) + ")) != 0 for radical vector " + std::to_string(r + 1);
    return std::nullopt;
  });
  ck.run("radical ideal", [&]() -> Fail {
    rad.quotient = quotient_by_ideal(a, radical, IdealCheck::automatic, report.value("seed", 0ULL));
    if (rad.quotient.ideal.rows != vecs_from_json(report.at("radical").at("reduced_basis")))
      return "reduced basis does not match the radical basis";
    return std::nullopt;
  });
  ck.run("radical nilpotency", [&]() -> Fail {
    std::vector<Vec> cur = span_basis(radical, a.dim());
    for (std::size_t step = 0; step <= radical.size() && !cur.empty(); ++step) {
      RowEchelon next(a.dim());
      for (const auto& x : cur)
        for (const auto& y : radical) next.insert(multiply(a, x, y));
      cur = next.canonical_rows();
    }
    if (!cur.empty()) return std::string("powers of the radical do not reach zero");
    return std::nullopt;
  });
  const Algebra& q = rad.quotient.algebra;
  ck.run("quotient semisimple", [&]() -> Fail {
    if (Json(structure_to_json(q)) != report.at("radical").at("quotient_relations"))
      return "quotient relations differ from the recomputed quotient";
    if (rank(dickson_matrix(q)) != q.dim()) return "trace form of the quotient is singular";
    return std::nullopt;
  });

  if (report.contains("center")) {
    ck.run("center", [&]() -> Fail {
      std::vector<Vec> z = vecs_from_json(report.at("center").at("center_basis"));
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j)
          if (left_basis_multiply(q, j, z[i]) != right_basis_multiply(q, z[i], j))
            return "z_" + std::to_string(i + 1) + " does not commute with b_" + std::to_string(j + 1);
      if (structure_to_json(center_structure(q, z)) != report.at("center").at("center_structure"))
        return "center structure constants differ";
      return std::nullopt;
    });
  }

  std::vector<Vec> idem;
  if (report.contains("split")) {
    ck.run("idempotent relations", [&]() -> Fail {
      idem = vecs_from_json(report.at("split").at("idempotents"));
      Vec sum(q.dim());
      for (std::size_t i = 0; i < idem.size(); ++i) {
        sum = sum + idem[i];
        for (std::size_t j = 0; j < idem.size(); ++j) {
          Vec p = multiply(q, idem[i], idem[j]);
          if (i == j ? p != idem[i] : !is_zero(p))
            return "e_" + std::to_string(i + 1) + " e_" + std::to_string(j + 1) + " is wrong";
        }
      }
      if (!q.one() || sum != *q.one()) return std::string("idempotents do not sum to the identity");
      return std::nullopt;
    });
  }

  if (report.contains("wedderburn")) {
    const Json& comps = report.at("wedderburn").at("components");
    ck.run("matrix unit relations", [&]() -> Fail {
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const Json& c = comps[k];
        if (c.at("status") != "split") continue;
        std::size_t qk = c.at("q").get<std::size_t>();
        Vec e = vec_from_json(c.at("idempotent"));
        if (auto bad = check_matrix_units(q, vecs_from_json(c.at("matrix_units")), qk, e))
          return "component " + std::to_string(k + 1) + ": " + *bad;
        if (qk * qk != c.at("dim").get<std::size_t>()) return "component " + std::to_string(k + 1) + ": dim != q^2";
      }
      return std::nullopt;
    });
    ck.run("homomorphism property", [&]() -> Fail {
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const Json& c = comps[k];
        if (c.at("status") != "split") continue;
        const Json& rep = c.at("rep");
        std::size_t qk = c.at("q").get<std::size_t>();
        std::vector<MatrixQ> rho;
        for (std::size_t i = 0; i < n0; ++i) rho.push_back(matrix_from_json(rep.at("a_" + std::to_string(i + 1))));
        auto image = [&](const Vec& x) {
          MatrixQ m(qk, qk);
          for (std::size_t i = 0; i < n0; ++i)
            if (sgn(x[i]) != 0)
              for (std::size_t s = 0; s < qk; ++s)
                for (std::size_t t = 0; t < qk; ++t) m(s, t) += x[i] * rho[i](s, t);
          return m;
        };
        auto check_pair = [&](std::size_t i, std::size_t j) -> Fail {
          MatrixQ lhs = image(a.product(i, j).dense(a.dim()));
          if (!(lhs == rho[i] * rho[j]))
            return "component " + std::to_string(k + 1) + ": rho(a_" + std::to_string(i + 1) + " a_" +
                   std::to_string(j + 1) + ") != rho(a_" + std::to_string(i + 1) + ") rho(a_" + std::to_string(j + 1) + ")";
          return std::nullopt;
        };
        if (n0 <= 64) {
          for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n0; ++j)
              if (auto bad = check_pair(i, j)) return bad;
        } else {
          std::mt19937_64 rng(report.value("seed", 0ULL));
          for (int s = 0; s < 2000; ++s)
            if (auto bad = check_pair(rng() % n0, rng() % n0)) return bad;
        }
        for (const auto& x : radical) {
          if (adjoined && sgn(x[n0]) != 0) return std::string("radical vector involves the adjoined identity");
          if (!image(x).is_zero()) return "component " + std::to_string(k + 1) + ": radical is not mapped to zero";
        }
      }
      return std::nullopt;
    });
  }

  if (report.contains("lift") && !report.at("lift").is_null() && report.contains("wedderburn")) {
    ck.run("lift closure", [&]() -> Fail {
      std::vector<Vec> w;
      std::vector<std::vector<Vec>> blocks;
      std::vector<std::size_t> sizes;
      for (const auto& c : report.at("wedderburn").at("components")) {
        const bool split = c.at("status") == "split";
        auto block = vecs_from_json(split ? c.at("matrix_units") : c.at("basis"));
        w.insert(w.end(), block.begin(), block.end());
        blocks.push_back(block);
        sizes.push_back(split ? c.at("q").get<std::size_t>() : 0);
      }
      Algebra target = block_structure(q, blocks, sizes);
      return check_lift(a, rad, w, target, vecs_from_json(report.at("lift").at("basis")));
    });
  }
  return ck.results;
}

}  // namespace wdec
