#include "wdec/pipeline.hpp"

#include <algorithm>

namespace wdec {

std::vector<std::string> Decomposition::component_sizes() const {
  std::vector<std::pair<std::size_t, std::string>> sizes;
  for (const auto& c : components) {
    if (c.status == ComponentStatus::split) {
      sizes.emplace_back(c.q, std::to_string(c.q));
    } else {
      sizes.emplace_back(c.basis.size(), std::to_string(c.basis.size()) + "*");
    }
  }
  std::stable_sort(sizes.begin(), sizes.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (auto& s : sizes) out.push_back(std::move(s.second));
  return out;
}

std::string Decomposition::summary() const {
  std::string s = std::to_string(algebra.dim()) + " / ";
  s += radical ? std::to_string(radical->dim()) : "?";
  s += " / ";
  s += radical ? std::to_string(radical->quotient.algebra.dim()) : "?";
  s += " / ";
  auto sizes = component_sizes();
  if (sizes.empty()) s += "?";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + sizes[i];
  return s;
}

bool ensure_identity(Algebra& a) {
  if (a.one()) {
    if (!is_identity(a, *a.one())) throw Error(ErrorKind::input, "declared identity does not act as identity");
    return false;
  }
  if (auto one = find_identity(a)) {
    a.set_one(one);
    return false;
  }
  a = adjoin_identity(a);
  return true;
}

namespace {

template <class F>
bool run_stage(Decomposition& d, const char* stage, F&& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    d.errors.push_back({stage, e.kind(), e.what()});
  } catch (const std::exception& e) {
    d.errors.push_back({stage, ErrorKind::internal, e.what()});
  }
  return false;
}

void check_associative(const Algebra& a, const PipelineOptions& opt) {
  if (opt.check_assoc == AssocMode::off) return;
  AssocOptions ao;
  ao.mode = opt.check_assoc;
  ao.seed = opt.seed;
  if (auto bad = find_associativity_violation(a, ao)) {
    throw Error(ErrorKind::not_associative, "input is not associative: (a" + std::to_string((*bad)[0] + 1) + " a" +
                                                std::to_string((*bad)[1] + 1) + ") a" + std::to_string((*bad)[2] + 1) +
                                                " differs from a" + std::to_string((*bad)[0] + 1) + " (a" +
                                                std::to_string((*bad)[1] + 1) + " a" +
                                                std::to_string((*bad)[2] + 1) + ")");
  }
}

}  // namespace

Decomposition decompose(const Algebra& input, const std::optional<MultiplicationTable>& table,
                        const PipelineOptions& opt) {
  require_rational_field(opt.field);
  Decomposition d;
  d.input_dim = input.dim();
  if (input.dim() == 0) throw Error(ErrorKind::input, "the algebra has dimension 0");
  if (table) {
    if (table->order != input.dim()) throw Error(ErrorKind::input, "table order does not match the algebra");
    if (table_identity(*table)) {
      d.table = table;
      d.algebra = input;
    } else {
      d.table = adjoin_table_identity(*table);
      d.algebra = semigroup_algebra(*d.table);
      d.identity_adjoined = true;
    }
  } else {
    check_associative(input, opt);
    d.algebra = input;
    d.identity_adjoined = ensure_identity(d.algebra);
  }
  const Algebra& a = d.algebra;

  RadicalOptions ro;
  ro.seed = opt.seed;
  if (!run_stage(d, "radical", [&] { d.radical = d.table ? radical_basis(a, *d.table, ro) : radical_basis(a, ro); }))
    return d;
  const Algebra& q = d.radical->quotient.algebra;

  if (!run_stage(d, "center", [&] { d.center = compute_center(q); })) return d;

  if (!run_stage(d, "split", [&] {
        SplitOptions so;
        so.seed = opt.seed;
        so.kronecker_max_degree = opt.kronecker_max_degree;
        so.primitive_trials = opt.primitive_trials;
        d.split = split_to_idempotents(d.center->structure, *d.center->identity, so);
        for (const auto& leaf : d.split->components) {
          Vec e(q.dim());
          for (std::size_t i = 0; i < leaf.idempotent.size(); ++i)
            if (sgn(leaf.idempotent[i]) != 0) axpy(e, leaf.idempotent[i], d.center->basis[i]);
          d.idempotents.push_back(std::move(e));
        }
        for (const auto& leaf : d.split->components)
          if (leaf.status == NodeStatus::unresolved) throw Error(ErrorKind::unresolved, "unresolved component: " + leaf.note);
      })) {
    if (!d.split) return d;
  }

  run_stage(d, "wedderburn", [&] {
    d.components = simple_components(q, d.idempotents, d.split->components, opt.seed);
    d.reps = representations(*d.radical, d.components, d.input_dim);
    for (std::size_t k = 0; k < d.components.size(); ++k) {
      const auto& c = d.components[k];
      const auto& block = c.status == ComponentStatus::split ? c.units : c.basis;
      d.unit_basis.insert(d.unit_basis.end(), block.begin(), block.end());
    }
    for (const auto& c : d.components)
      if (c.status == ComponentStatus::search_failed)
        throw Error(ErrorKind::unresolved, "component " + std::to_string(&c - d.components.data() + 1) + ": " + c.note);
  });

  if (opt.lift && d.reps) {
    run_stage(d, "lift", [&] {
      std::vector<std::vector<Vec>> blocks;
      std::vector<std::size_t> sizes;
      bool all_split = true;
      for (const auto& c : d.components) {
        const bool split = c.status == ComponentStatus::split;
        blocks.push_back(split ? c.units : c.basis);
        sizes.push_back(split ? c.q : 0);
        all_split = all_split && split;
      }
      d.unit_structure = block_structure(q, blocks, sizes);
      d.lift = lift_general(a, *d.radical, d.unit_basis, *d.unit_structure, opt.lift_params,
                            all_split ? sizes : std::vector<std::size_t>{});
      if (auto bad = check_lift(a, *d.radical, d.unit_basis, *d.unit_structure, d.lift->basis)) {
        throw Error(ErrorKind::internal, "lift verification failed: " + *bad);
      }
    });
  }
  return d;
}

Algebra table_algebra(const MultiplicationTable& t) {
  Algebra a(t.order);
  for (std::size_t i = 0; i < t.order; ++i)
    for (std::size_t j = 0; j < t.order; ++j) a.add_constant(i, j, t(i, j), 1);
  if (auto e = table_identity(t)) a.set_one(unit_vec(t.order, *e));
  return a;
}

Decomposition decompose_table(const MultiplicationTable& t, const PipelineOptions& opt) {
  require_rational_field(opt.field);
  if (opt.check_assoc != AssocMode::off) {
    if (auto bad = find_table_associativity_violation(t)) {
      throw Error(ErrorKind::not_associative, "table is not associative at (" + std::to_string((*bad)[0] + 1) + ", " +
                                                  std::to_string((*bad)[1] + 1) + ", " +
                                                  std::to_string((*bad)[2] + 1) + ")");
    }
  }
  return decompose(table_algebra(t), t, opt);
}

}  // namespace wdec
