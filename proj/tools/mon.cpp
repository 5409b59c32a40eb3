// mon: command-line front end for the monoidkit library.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monoidkit/acts.hpp"
#include "monoidkit/catalog.hpp"
#include "monoidkit/deciders.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/io.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/verifier.hpp"

namespace mk = monoidkit;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kValidation = 1, kCapacity = 2, kCheckFailure = 3;

std::string version_string() {
  return "mon 1.0.0 (manifest " + mk::manifest_hash() + ")";
}

mk::Side parse_side(const std::string& s) {
  if (s == "right") return mk::Side::Right;
  if (s == "left") return mk::Side::Left;
  throw mk::ValidationError("side must be 'right' or 'left', got '" + s + "'");
}

std::vector<mk::ElemPair> parse_pairs(const std::string& text, std::size_t order) {
  std::vector<mk::ElemPair> out;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    unsigned a, b;
    if (std::sscanf(chunk.c_str(), " ( %u , %u )", &a, &b) != 2)
      throw mk::ValidationError("bad pair syntax '" + chunk +
                                "'; expected \"(i,j)\" separated by ';'");
    if (a >= order || b >= order)
      throw mk::ValidationError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                ") out of range for order " + std::to_string(order));
    out.push_back({a, b});
  }
  if (out.empty()) throw mk::ValidationError("--pairs contained no pairs");
  return out;
}

json classes_json(const mk::MonoidView& v, const mk::EqRelation& r) {
  json out = json::array();
  for (auto& cls : r.classes()) {
    json c = json::array();
    for (mk::Elem e : cls) c.push_back(v.label(e));
    out.push_back(std::move(c));
  }
  return out;
}

json classify_json(const mk::ClassificationReport& r) {
  json j;
  j["group"] = r.group;
  j["left_cancellative"] = r.left_cancellative;
  j["right_cancellative"] = r.right_cancellative;
  j["unipotent"] = r.unipotent;
  j["regular"] = r.regular;
  j["inverse"] = r.inverse;
  j["proper_inverse"] = r.proper_inverse;
  j["left_abundant"] = r.left_abundant;
  j["right_abundant"] = r.right_abundant;
  j["left_fountain"] = r.left_fountain;
  j["right_fountain"] = r.right_fountain;
  if (r.e_checks_done) {
    j["right_ehresmann"] = r.right_ehresmann;
    j["left_ehresmann"] = r.left_ehresmann;
    j["right_adequate"] = r.right_adequate;
    j["left_adequate"] = r.left_adequate;
    j["right_restriction"] = r.right_restriction;
    j["left_restriction"] = r.left_restriction;
    j["right_ample"] = r.right_ample;
    j["left_ample"] = r.left_ample;
    j["proper_right_restriction"] = r.proper_right_restriction;
    j["proper_left_restriction"] = r.proper_left_restriction;
  }
  return j;
}

void emit(const json& j, bool as_json, const std::string& out_path) {
  std::ostream* os = &std::cout;
  std::ofstream f;
  if (!out_path.empty()) {
    f.open(out_path);
    if (!f) throw mk::ValidationError("cannot open --out file " + out_path);
    os = &f;
  }
  if (as_json) {
    *os << j.dump(2) << "\n";
    return;
  }
  // flat text rendering
  std::function<void(const std::string&, const json&)> walk =
      [&](const std::string& key, const json& v) {
        if (v.is_object()) {
          for (auto it = v.begin(); it != v.end(); ++it)
            walk(key.empty() ? it.key() : key + "." + it.key(), it.value());
        } else {
          *os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
        }
      };
  walk("", j);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"monoidkit front end: finite monoids, their expansions S(M) and "
               "Sz(M), one-sided congruences, and finitary-condition deciders"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  std::string in, out, kind = "S", side_s = "right", pairs_s, witness_s, format;
  std::string checks_s, report_path, artifact_dir, pred, name;
  bool as_json = false, do_mingens = false, do_materialize = false, expand_view = false;
  std::size_t cap = 4096, n = 0, limit = 0, order_max = 3, catalog_max = 5;
  std::size_t samples = 300, seed = 1, exhaustive_upto = 5, coord_n = 1;
  long a_idx = -1, b_idx = -1;
  mk::Mask A_mask = 0, B_mask = 0;

  auto add_common = [&](CLI::App* c, bool needs_in = true) {
    if (needs_in)
      c->add_option("--in", in, "input monoid file (.mon or .json)")->required();
    c->add_flag("--json", as_json, "emit JSON instead of text");
  };

  auto* c_inspect = app.add_subcommand("inspect", "order, idempotents, classification");
  add_common(c_inspect);
  c_inspect->add_flag("--expand", expand_view, "inspect S(M) instead of M");

  auto* c_expand = app.add_subcommand("expand", "build S(M) or Sz(M)");
  add_common(c_expand);
  c_expand->add_option("--kind", kind, "S or Sz")->check(CLI::IsMember({"S", "Sz"}));
  c_expand->add_flag("--materialize", do_materialize, "write the full table");
  c_expand->add_option("--cap", cap, "materialization cap (elements)");
  c_expand->add_option("--out", out, "output monoid file");

  auto* c_rel = app.add_subcommand("relations", "Green's and generalized relations");
  add_common(c_rel);
  c_rel->add_flag("--expand", expand_view, "compute in S(M) instead of M");

  auto* c_cong = app.add_subcommand("congruence", "one-sided congruence closure");
  add_common(c_cong);
  c_cong->add_option("--side", side_s, "right or left");
  c_cong->add_option("--pairs", pairs_s, "generators, e.g. \"(1,2);(0,3)\"")->required();
  c_cong->add_option("--witness", witness_s, "pair a,b to witness (indices)");
  c_cong->add_flag("--min-gens", do_mingens, "search a minimum generating set");

  auto* c_how = app.add_subcommand("howson", "ideal Howson conditions and coherence");
  add_common(c_how);
  c_how->add_option("--side", side_s, "right or left");

  auto* c_coord = app.add_subcommand("coordinate", "left co-ordinate systems");
  add_common(c_coord);
  c_coord->add_option("--a", a_idx, "element index a (with --b: minimum system)");
  c_coord->add_option("--b", b_idx, "element index b");
  c_coord->add_option("--A", A_mask, "subset A as a bitmask");
  c_coord->add_option("--B", B_mask, "subset B as a bitmask");
  c_coord->add_option("--n", coord_n, "test n-left-co-ordination (default 1)");
  c_coord->add_option("--exhaustive-upto", exhaustive_upto, "exhaustive order cap");
  c_coord->add_option("--samples", samples, "sample count above the cap");
  c_coord->add_option("--seed", seed, "sampling seed");

  auto* c_verify = app.add_subcommand("verify", "run the property-check suite");
  c_verify->add_option("--checks", checks_s, "comma-separated check ids (default all)");
  c_verify->add_option("--order-max", order_max, "enumerated-base order cap");
  c_verify->add_option("--catalog-order-max", catalog_max, "catalog order cap");
  c_verify->add_option("--samples", samples, "samples per sampled check");
  c_verify->add_option("--seed", seed, "seed for sampled checks");
  c_verify->add_option("--report", report_path, "write the JSON report here");
  c_verify->add_option("--artifacts", artifact_dir, "directory for counterexample files");

  auto* c_enum = app.add_subcommand("enumerate", "monoids of order n up to isomorphism");
  c_enum->add_option("--n", n, "order")->required();
  c_enum->add_option("--limit", limit, "stop after this many (0 = all)");
  c_enum->add_option("--out", out, "write tables to this file");
  c_enum->add_flag("--json", as_json, "emit JSON instead of text");

  auto* c_cat = app.add_subcommand("catalog", "list or export named monoids");
  c_cat->add_option("--name", name, "export this entry");
  c_cat->add_option("--out", out, "output monoid file (with --name)");
  c_cat->add_flag("--json", as_json, "emit JSON instead of text");

  auto* c_search = app.add_subcommand("search", "smallest monoid failing a predicate");
  c_search->add_option("--predicate", pred, "predicate id (see --list)")->required();
  c_search->add_option("--min", order_max, "minimum order")->default_val(1);
  c_search->add_option("--max", catalog_max, "maximum order")->default_val(4);
  c_search->add_option("--out", out, "write the failing monoid here");
  c_search->add_flag("--json", as_json, "emit JSON instead of text");

  CLI11_PARSE(app, argc, argv);

  if (c_inspect->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    json j;
    if (expand_view) {
      mk::SView sv(m);
      j["order"] = sv.order();
      j["base_order"] = m.order();
      j["idempotents"] = mk::idempotents(sv).count();
      j["classification"] = classify_json(mk::classify(sv));
    } else {
      j["order"] = m.order();
      json labels = json::array();
      for (mk::Elem e = 0; e < m.order(); ++e) labels.push_back(m.label(e));
      j["labels"] = std::move(labels);
      json idem = json::array();
      mk::idempotents(m).for_each([&](mk::Elem e) { idem.push_back(m.label(e)); });
      j["idempotents"] = std::move(idem);
      j["classification"] = classify_json(mk::classify(m));
    }
    emit(j, as_json, "");
    return kOk;
  }

  if (c_expand->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    json j;
    j["kind"] = kind;
    if (kind == "S") {
      mk::SView sv(m);
      j["order"] = sv.order();
      if (do_materialize || !out.empty()) {
        const mk::FiniteMonoid big = mk::materialize(sv, cap);
        if (!out.empty()) mk::save_monoid_file(big, out);
        j["materialized"] = true;
      }
    } else {
      mk::SzView szv(m);
      j["order"] = szv.order();
      if (do_materialize || !out.empty()) {
        const mk::FiniteMonoid big = mk::materialize(szv, cap);
        if (!out.empty()) mk::save_monoid_file(big, out);
        j["materialized"] = true;
      }
    }
    if (!out.empty()) j["out"] = out;
    emit(j, as_json, "");
    return kOk;
  }

  if (c_rel->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    json j;
    auto fill = [&](const mk::MonoidView& v) {
      const mk::GreensRelations g = mk::greens_relations(v);
      j["order"] = v.order();
      j["R_classes"] = g.R.num_classes();
      j["L_classes"] = g.L.num_classes();
      j["Rstar_classes"] = mk::relation_Rstar(v).num_classes();
      j["Lstar_classes"] = mk::relation_Lstar(v).num_classes();
      const mk::ElemSet E = mk::idempotents(v);
      j["Rtilde_classes"] = mk::relation_Rtilde(v, E).num_classes();
      j["Ltilde_classes"] = mk::relation_Ltilde(v, E).num_classes();
      if (v.order() <= 64) {
        j["R"] = classes_json(v, g.R);
        j["L"] = classes_json(v, g.L);
      }
    };
    if (expand_view) {
      mk::SView sv(m);
      fill(sv);
    } else {
      fill(m);
    }
    emit(j, as_json, "");
    return kOk;
  }

  if (c_cong->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    const mk::Side side = parse_side(side_s);
    const auto kind_r = side == mk::Side::Right ? mk::RelKind::RightCongruence
                                                : mk::RelKind::LeftCongruence;
    const auto W = parse_pairs(pairs_s, m.order());
    const mk::EqRelation rel = mk::congruence_closure(m, W, kind_r);
    json j;
    j["side"] = side_s;
    j["num_classes"] = rel.num_classes();
    j["classes"] = classes_json(m, rel);
    if (!witness_s.empty()) {
      unsigned wa, wb;
      if (std::sscanf(witness_s.c_str(), " %u , %u", &wa, &wb) != 2 ||
          wa >= m.order() || wb >= m.order())
        throw mk::ValidationError("--witness expects \"a,b\" element indices");
      const auto ws = mk::find_w_sequence(m, W, side, wa, wb);
      if (ws) {
        json steps = json::array();
        for (const auto& st : ws->steps)
          steps.push_back({m.label(st.c), m.label(st.d), m.label(st.t)});
        j["witness"] = std::move(steps);
        json skel = json::array();
        for (const auto& pr : mk::skeleton(*ws))
          skel.push_back({m.label(pr.first), m.label(pr.second)});
        j["skeleton"] = std::move(skel);
      } else {
        j["witness"] = nullptr;
      }
    }
    if (do_mingens) {
      const auto mg = mk::min_generators_congruence(m, rel, side);
      json gens = json::array();
      for (const auto& pr : mg.generators)
        gens.push_back({m.label(pr.first), m.label(pr.second)});
      j["min_generators"] = {{"exact", mg.exact},
                             {"lower", mg.lower},
                             {"upper", mg.upper},
                             {"generators", std::move(gens)}};
    }
    emit(j, as_json, "");
    return kOk;
  }

  if (c_how->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    const mk::Side side = parse_side(side_s);
    const mk::HowsonReport r = mk::howson_report(m, side);
    json j;
    j["side"] = side_s;
    j["ideal_howson"] = r.ideal_howson;
    j["principally_ideal_howson"] = r.principal.verdict;
    if (r.principal.witness) {
      j["principal_counterexample"] = {m.label(r.principal.witness->a),
                                       m.label(r.principal.witness->b)};
    }
    j["strong_max_n"] = r.strong.max_n;
    const mk::WeakCoherenceReport w = mk::weak_coherence_report(m);
    j["finitely_right_equated"] = w.finitely_right_equated;
    j["finitely_left_equated"] = w.finitely_left_equated;
    j["weakly_right_coherent"] = w.right_ideal_howson && w.finitely_right_equated;
    j["weakly_left_coherent"] = w.left_ideal_howson && w.finitely_left_equated;
    j["max_r_generators"] = w.max_r_generators;
    j["max_l_generators"] = w.max_l_generators;
    emit(j, as_json, "");
    return kOk;
  }

  if (c_coord->parsed()) {
    const mk::FiniteMonoid m = mk::load_monoid_file(in);
    json j;
    if (a_idx >= 0 && b_idx >= 0) {
      if (std::size_t(a_idx) >= m.order() || std::size_t(b_idx) >= m.order())
        throw mk::ValidationError("--a/--b out of range");
      const auto mc = mk::min_coordinate_system(
          m, mk::Elem(a_idx), mk::Elem(b_idx),
          mk::ElemSet::from_mask(m.order(), A_mask),
          mk::ElemSet::from_mask(m.order(), B_mask), 4);
      j["exact"] = mc.exact;
      j["size"] = mc.size;
      json prs = json::array();
      for (auto [p, q] : mc.pairs) prs.push_back({m.label(p), m.label(q)});
      j["pairs"] = std::move(prs);
    } else {
      mk::CoordBudget budget;
      budget.exhaustive_upto = exhaustive_upto;
      budget.samples = samples;
      budget.seed = seed;
      const auto r = mk::is_n_left_coordinated(m, coord_n, budget);
      j["n"] = coord_n;
      j["verdict"] = r.verdict;
      j["exhaustive"] = !r.sampled;
      if (r.worst_a != mk::kNoElem)
        j["worst_instance"] = {{"a", m.label(r.worst_a)},
                               {"b", m.label(r.worst_b)},
                               {"min_system_size", r.worst_min}};
    }
    emit(j, as_json, "");
    return kOk;
  }

  if (c_verify->parsed()) {
    mk::VerifierConfig cfg;
    cfg.enum_order_max = order_max;
    cfg.catalog_order_max = catalog_max;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.artifact_dir = artifact_dir;
    if (!checks_s.empty()) {
      std::stringstream ss(checks_s);
      std::string id;
      while (std::getline(ss, id, ',')) cfg.check_ids.push_back(id);
    }
    const mk::VerdictReport rep = mk::run_suite(cfg);
    const std::string body = mk::report_to_json(rep);
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      if (!f) throw mk::ValidationError("cannot open --report file " + report_path);
      f << body << "\n";
    }
    for (const auto& r : rep.results) {
      const char* st = r.status == mk::CheckResult::Status::Pass          ? "pass"
                       : r.status == mk::CheckResult::Status::SampledPass ? "sampled-pass"
                       : r.status == mk::CheckResult::Status::Fail        ? "FAIL"
                                                                          : "ERROR";
      std::cout << r.id << ": " << st;
      if (!r.counterexample.empty()) std::cout << " (" << r.counterexample << ")";
      std::cout << "\n";
    }
    std::cout << (rep.all_passed ? "all checks passed" : "CHECK FAILURES") << "\n";
    return rep.all_passed ? kOk : kCheckFailure;
  }

  if (c_enum->parsed()) {
    const auto ms = mk::enumerate_monoids(n, limit);
    json j;
    j["order"] = n;
    j["count"] = ms.size();
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw mk::ValidationError("cannot open --out file " + out);
      for (const auto& m : ms) f << mk::write_monoid_text(m) << "\n";
      j["out"] = out;
    }
    emit(j, as_json, "");
    return kOk;
  }

  if (c_cat->parsed()) {
    if (name.empty()) {
      json j = json::array();
      for (const auto& e : mk::catalog_entries())
        j.push_back({{"name", e.name},
                     {"order", e.build().order()},
                     {"parameters", e.parameters}});
      emit(json{{"entries", j}}, as_json, "");
      return kOk;
    }
    const mk::FiniteMonoid m = mk::catalog_get(name);
    if (!out.empty()) {
      mk::save_monoid_file(m, out);
      emit(json{{"name", name}, {"order", m.order()}, {"out", out}}, as_json, "");
    } else {
      std::cout << mk::write_monoid_text(m);
    }
    return kOk;
  }

  if (c_search->parsed()) {
    const auto hit = mk::search_counterexample(pred, order_max, catalog_max);
    json j;
    j["predicate"] = pred;
    j["found"] = hit.has_value();
    if (hit) {
      j["order"] = hit->monoid.order();
      j["detail"] = hit->detail;
      if (!out.empty()) {
        mk::save_monoid_file(hit->monoid, out);
        j["out"] = out;
      }
    }
    emit(j, as_json, "");
    return kOk;
  }

  return kValidation;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const mk::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const mk::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
