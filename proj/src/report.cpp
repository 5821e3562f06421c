#include "ftors/report.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ftors/ar_finite.hpp"
#include "ftors/errors.hpp"
#include "ftors/ext_pairs.hpp"
#include "ftors/filtration.hpp"
#include "ftors/torsion.hpp"

namespace ftors {

using nlohmann::json;

void validate_config(const RunConfig& config) {
  if (!is_prime(config.prime) || config.prime >= kMaxPrime) {
    throw PreconditionError("prime must be a prime below " + std::to_string(kMaxPrime));
  }
  if (config.dim_bound < 1) throw PreconditionError("dimension bound must be positive");
  if (config.loewy_bound < 2) throw PreconditionError("Loewy bound must be at least 2");
}

namespace {

Report guarded(const std::function<Report()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kExitBadInput, {}, std::string("parse error: ") + e.what()};
  } catch (const InvalidQuiver& e) {
    return {kExitBadInput, {}, std::string("invalid quiver: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {kExitBadInput, {}, e.what()};
  } catch (const Inconclusive& e) {
    return {kExitInconclusive, {}, std::string("inconclusive: ") + e.what()};
  } catch (const CapExceeded& e) {
    return {kExitInconclusive, {}, std::string("budget exceeded: ") + e.what()};
  } catch (const std::logic_error& e) {
    return {kExitVerificationFailed, {}, std::string("verification failed: ") + e.what()};
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed, const char* command) {
  for (auto f : allowed)
    if (f == config.format) return;
  throw PreconditionError(std::string("output format not available for ") + command);
}

std::string lattice_prediction(const Quiver& q, const QuiverType& type) {
  if (type.representation_finite()) return "f-tors is a lattice";
  if (q.size() <= 2) return "f-tors is a lattice";
  return "f-tors is NOT a lattice";
}

std::string family_word(const QuiverType& t) {
  switch (t.family) {
    case TypeFamily::Dynkin:
      return "Dynkin";
    case TypeFamily::Euclidean:
      return "Euclidean";
    case TypeFamily::Wild:
      break;
  }
  return "wild";
}

}  // namespace

Report classify_report(const QuiverPtr& q, const RunConfig& config) {
  return guarded([&] {
    validate_config(config);
    require_format(config, {OutputFormat::Text, OutputFormat::Json}, "classify");
    const auto type = classify_type(*q);
    const std::string finiteness = type.representation_finite() ? "rep-finite" : (type.tame() ? "tame" : "wild");
    std::map<std::pair<int, int>, int> valuations;
    for (const auto& a : q->arrows()) valuations[{a.source, a.target}] = valuation(*q, a.source, a.target);
    if (config.format == OutputFormat::Json) {
      json j;
      j["family"] = family_word(type);
      j["type"] = type.name;
      j["representation_finite"] = type.representation_finite();
      j["tame"] = type.tame();
      j["simples"] = q->size();
      j["valuations"] = json::array();
      for (const auto& [edge, v] : valuations)
        j["valuations"].push_back({{"from", q->label(edge.first)}, {"to", q->label(edge.second)}, {"v", v}});
      j["prediction"] = lattice_prediction(*q, type);
      return Report{kExitOk, dump(j), {}};
    }
    std::ostringstream os;
    os << family_word(type) << " " << type.name << "; " << finiteness << "; " << q->size() << " simples; "
       << lattice_prediction(*q, type) << "\n";
    for (const auto& [edge, v] : valuations)
      os << "v(" << q->label(edge.first) << "," << q->label(edge.second) << ") = " << v << "\n";
    return Report{kExitOk, os.str(), {}};
  });
}

Report knit_report(const QuiverPtr& q, const RunConfig& config) {
  return guarded([&] {
    validate_config(config);
    const ARQuiver ar = knit_ar_quiver(q, config.prime);
    if (!meshes_consistent(ar)) throw std::logic_error("mesh relations fail");
    if (config.format == OutputFormat::Dot) return Report{kExitOk, emit_dot(ar), {}};
    if (config.format == OutputFormat::Json) {
      json j;
      j["type"] = classify_type(*q).name;
      j["nodes"] = json::array();
      for (const auto& n : ar.nodes) {
        j["nodes"].push_back({{"dim", n.root}, {"orbit_vertex", q->label(n.tau_orbit)}, {"step", n.step},
                              {"module", to_json(n.module)}});
      }
      j["arrows"] = json::array();
      for (const auto& a : ar.arrows) j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"multiplicity", a.multiplicity}});
      j["tau"] = ar.tau_pairs;
      j["meshes_consistent"] = true;
      return Report{kExitOk, dump(j), {}};
    }
    std::ostringstream os;
    os << classify_type(*q).name << ": " << ar.nodes.size() << " indecomposables, " << ar.arrows.size()
       << " irreducible-map arrows, " << ar.tau_pairs.size() << " tau pairs\n";
    for (std::size_t k = 0; k < ar.nodes.size(); ++k) {
      const auto& n = ar.nodes[k];
      os << "  [" << k << "] " << dims_string(n.root) << "  tau^-" << n.step << " P(" << q->label(n.tau_orbit) << ")\n";
    }
    return Report{kExitOk, os.str(), {}};
  });
}

namespace {

Report two_simple_report(const QuiverPtr& q, const RunConfig& config) {
  require_format(config, {OutputFormat::Text, OutputFormat::Json}, "bounded torsion check");
  const auto r = two_simple_bounded_check(q, config.prime, config.dim_bound);
  const int code = r.ok() ? kExitOk : kExitVerificationFailed;
  if (config.format == OutputFormat::Json) {
    json j{{"bounded", true},
           {"dim_bound", config.dim_bound},
           {"universe_size", r.universe_size},
           {"family_size", r.family_size},
           {"meets_checked", r.meets_checked},
           {"joins_checked", r.joins_checked},
           {"failures", r.failures},
           {"ok", r.ok()}};
    return Report{code, dump(j), {}};
  }
  std::ostringstream os;
  os << "bounded two-simple check (dim <= " << config.dim_bound << "): universe " << r.universe_size
     << ", classes with covers " << r.family_size << ", meets " << r.meets_checked << ", joins " << r.joins_checked
     << ": " << (r.ok() ? "closed" : "FAILED") << "\n";
  for (const auto& f : r.failures) os << "  " << f << "\n";
  return Report{code, os.str(), {}};
}

}  // namespace

Report tors_report(const QuiverPtr& q, const RunConfig& config) {
  return guarded([&] {
    validate_config(config);
    const auto type = classify_type(*q);
    if (!type.representation_finite()) {
      if (q->size() == 2) return two_simple_report(q, config);
      throw PreconditionError("torsion-class enumeration needs a Dynkin quiver");
    }
    const ARQuiver ar = knit_ar_quiver(q, config.prime);
    TorsionContext ctx(universe_from_ar(ar), config.seed);
    const auto classes = enumerate_torsion_classes(ctx);
    const auto lattice = lattice_check(ctx, classes);
    if (config.format == OutputFormat::Dot) {
      return Report{lattice.ok() ? kExitOk : kExitVerificationFailed, emit_hasse_dot(ctx, classes, lattice.hasse), {}};
    }
    Rng rng(config.seed);
    std::vector<std::optional<NormalForm>> covers;
    bool all_covered = true;
    for (const auto& c : classes) {
      covers.push_back(find_cover(ctx, c, rng));
      all_covered = all_covered && covers.back().has_value();
    }
    const int code = lattice.ok() && all_covered ? kExitOk : kExitVerificationFailed;
    if (config.format == OutputFormat::Json) {
      json j = torsion_report_json(ctx, classes, covers, lattice);
      j["type"] = type.name;
      j["class_count"] = classes.size();
      return Report{code, dump(j), {}};
    }
    std::ostringstream os;
    os << type.name << ": " << classes.size() << " torsion classes; lattice " << (lattice.ok() ? "ok" : "FAILED")
       << "; " << lattice.hasse.size() << " covering relations\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      os << "  [" << i << "] {";
      bool first = true;
      for (int k : member_indices(classes[i].members)) {
        os << (first ? "" : " ") << dims_string(ctx.universe().modules[k].dims());
        first = false;
      }
      os << "}  cover:";
      if (covers[i]) {
        if (covers[i]->summands.empty()) os << " 0";
        for (const auto& s : covers[i]->summands) os << " " << dims_string(s.dims());
      } else {
        os << " none";
      }
      os << "\n";
    }
    for (const auto& f : lattice.failures) os << "  failure: " << f << "\n";
    return Report{code, os.str(), {}};
  });
}

Report extpair_report(const QuiverPtr& q, const RunConfig& config) {
  return guarded([&] {
    validate_config(config);
    require_format(config, {OutputFormat::Text, OutputFormat::Json}, "extpair");
    Rng rng(config.seed);
    const auto cert = find_ext_pair(q, config.prime, rng);
    const auto check = verify_ext_pair(cert.x, cert.y);
    const int code = check.ok() ? kExitOk : kExitVerificationFailed;
    if (config.format == OutputFormat::Json) {
      json j = certificate_to_json(cert);
      j["verified"] = check.ok();
      return Report{code, dump(j), check.failure};
    }
    const auto& d = cert.dims;
    std::ostringstream os;
    os << "construction: " << cert.construction << "\n"
       << "X dim " << dims_string(cert.x.dims()) << ", Y dim " << dims_string(cert.y.dims()) << "\n"
       << "End X " << d.end_x << ", End Y " << d.end_y << ", Ext(X,X) " << d.ext_xx << ", Ext(Y,Y) " << d.ext_yy
       << "\nHom(X,Y) " << d.hom_xy << ", Hom(Y,X) " << d.hom_yx << ", Ext(X,Y) " << d.ext_xy << ", Ext(Y,X) "
       << d.ext_yx << "\n";
    for (const auto& s : cert.trail) os << "  " << s << "\n";
    if (!cert.over_input_quiver) os << "certificate lives over the reflected quiver\n";
    os << (check.ok() ? "verified Ext-pair\n" : "NOT an Ext-pair: " + check.failure + "\n");
    return Report{code, os.str(), check.failure};
  });
}

Report nocover_report(const QuiverPtr& q, const RunConfig& config) {
  return guarded([&] {
    validate_config(config);
    require_format(config, {OutputFormat::Text, OutputFormat::Json}, "nocover");
    if (classify_type(*q).representation_finite()) throw PreconditionError("no Ext-cycles in finite type");
    Rng rng(config.seed);
    const auto cert = find_ext_pair(q, config.prime, rng);
    const auto evidence = no_cover_evidence({cert.x, cert.y}, config.loewy_bound, rng);
    const int code = evidence.ok() ? kExitOk : kExitVerificationFailed;
    if (config.format == OutputFormat::Json) {
      json j = evidence_to_json(evidence);
      j["cycle"] = {cert.x.dims(), cert.y.dims()};
      j["construction"] = cert.construction;
      return Report{code, dump(j), {}};
    }
    std::ostringstream os;
    os << "Ext-pair " << dims_string(cert.x.dims()) << ", " << dims_string(cert.y.dims()) << " ("
       << cert.construction << ")\n"
       << "filtration universe: " << evidence.universe_size << " objects up to Loewy length " << evidence.max_length
       << (evidence.truncated ? " (truncated)" : "") << "\n";
    for (const auto& w : evidence.witnesses) {
      os << "  r = " << w.loewy_bound << ": serial " << dims_string(w.witness_dims) << " of length "
         << w.loewy_bound + 1 << "; trace of " << w.candidates << " candidates has dim " << w.trace_total_dim << " < "
         << w.witness_total_dim << (w.generated ? "  GENERATED" : "") << "\n";
    }
    os << "generation bounds Loewy length: " << evidence.loewy_checks << " checks, "
       << evidence.loewy_counterexamples << " counterexamples\n"
       << "bounded evidence, not a proof\n";
    return Report{code, os.str(), {}};
  });
}

Report run_subcommand(const std::string& name, const std::string& quiver_text, const RunConfig& config) {
  static const std::map<std::string, Report (*)(const QuiverPtr&, const RunConfig&)> commands{
      {"classify", classify_report}, {"knit", knit_report},       {"tors", tors_report},
      {"extpair", extpair_report},   {"nocover", nocover_report}};
  auto it = commands.find(name);
  if (it == commands.end()) return Report{kExitBadInput, {}, "unknown subcommand " + name};
  QuiverPtr q;
  Report parsed = guarded([&] {
    q = share(parse_quiver_any(quiver_text));
    return Report{};
  });
  if (parsed.exit_code != kExitOk) return parsed;
  return it->second(q, config);
}

}  // namespace ftors
