#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "rdbound/engine.hpp"
#include "rdbound/error.hpp"
#include "rdbound/molien.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/psu3_data.hpp"
#include "rdbound/psu3_reps.hpp"
#include "rdbound/report.hpp"
#include "rdbound/sl2_chars.hpp"

namespace rdbound::cli {

namespace {

using nlohmann::ordered_json;

std::string group_name(Family f, uint32_t q) {
  return (f == Family::PSU2 ? "PSU(2," : "PSU(3,") + std::to_string(q) + ")";
}

ordered_json to_json(const BoundCertificate& c, bool flagged) {
  ordered_json j;
  j["family"] = std::string(family_name(c.family));
  j["q"] = c.q;
  j["dim_V"] = c.dim;
  j["bound_thm"] = c.bound;
  j["degrees"] = c.degrees;
  j["product"] = c.product;
  j["rd_upper_product"] = c.rd_product;
  j["mu"] = c.mu;
  j["bound_mu"] = c.bound_mu;
  j["known_bound"] = c.known_bound ? ordered_json(*c.known_bound) : ordered_json(nullptr);
  ordered_json counts = ordered_json::object();
  for (const auto& [d, m] : c.counts) counts[std::to_string(d)] = m;
  j["invariant_counts"] = counts;
  j["available_when_chosen"] = c.available;
  ordered_json ext = ordered_json::array();
  for (const auto& e : c.extensions)
    ext.push_back({{"degree", e.degree},
                   {"available", e.available},
                   {"product", e.product},
                   {"rd_upper_product", e.rd_product},
                   {"budget", e.budget},
                   {"irreducibility_fails", e.irreducibility_fails},
                   {"ladder_fails", e.ladder_fails}});
  j["extensions"] = ext;
  j["blocker"] = blocker_string(c.blockers);
  j["row_class"] = row_class_name(c.row_class);
  j["flagged"] = flagged;
  j["notes"] = c.notes;
  return j;
}

const RdLadder& pick_ladder(const RunConfig& cfg, std::unique_ptr<RdLadder>& holder) {
  if (cfg.ladder_path.empty()) return RdLadder::active();
  holder = std::make_unique<RdLadder>(RdLadder::from_file(cfg.ladder_path));
  return *holder;
}

void require_q(const RunConfig& cfg) {
  if (!cfg.q) throw Error(ErrorCode::InvalidArgument, "--q is required");
  if (!prime_power(*cfg.q)) throw Error(ErrorCode::NotPrimePower, std::to_string(*cfg.q) + " is not a prime power");
}

int cmd_bound(const RunConfig& cfg, const RdLadder& ladder, std::ostream& out) {
  require_q(cfg);
  TableOptions o{cfg.max_degree, cfg.paper_compat, &ladder};
  const auto c = certify(cfg.family, *cfg.q, o);
  const auto problems = verify_certificate(c, ladder);
  const bool flagged = !cfg.paper_compat && is_compat_flagged(cfg.family, c.q);
  if (cfg.format == Format::Json) {
    auto j = to_json(c, flagged);
    j["certificate_check"] = problems;
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << group_name(c.family, c.q) << "\n";
    out << "dim V: " << c.dim << "\n";
    out << "invariant counts:";
    for (const auto& [d, m] : c.counts) out << " m" << d << "=" << m;
    out << "\n";
    out << "degrees: " << c.degree_string() << "\n";
    if (c.r() > 0) {
      out << "product: " << c.product << " < mu = " << c.mu << "\n";
      out << "rd_upper(" << c.product << ") = " << c.rd_product << " <= dim V - 1 - r = " << c.bound << "\n";
    }
    out << "bound: " << c.bound << "\n";
    out << "mu: " << c.mu << "\n";
    out << "bound by mu: " << c.bound_mu << "\n";
    out << "blocker for r+1: " << blocker_string(c.blockers) << "\n";
    out << "row class: " << row_class_name(c.row_class) << "\n";
    if (flagged) out << "flagged: reference table differs in mu or RD(6); see --paper-compat\n";
    for (const auto& n : c.notes) out << "note: " << n << "\n";
    out << "certificate check: " << (problems.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& p : problems) out << "  " << p << "\n";
  }
  return problems.empty() ? kExitOk : kExitCheckFailure;
}

int cmd_table(const RunConfig& cfg, const RdLadder& ladder, std::ostream& out, std::ostream& err) {
  std::vector<uint32_t> qs;
  if (cfg.q_min == 0 && cfg.q_max == 0) {
    qs = table_qs(cfg.family);
  } else {
    const uint32_t lo = cfg.q_min ? cfg.q_min : (cfg.family == Family::PSU2 ? 4 : 2);
    qs = prime_powers_up_to(lo, cfg.q_max ? cfg.q_max : 125);
  }
  TableOptions o{cfg.max_degree, cfg.paper_compat, &ladder};
  const auto rows = make_table(cfg.family, qs, o, cfg.jobs);
  int status = kExitOk;
  ordered_json arr = ordered_json::array();
  if (cfg.format == Format::Csv) out << "q,dim_V,bound_thm,degrees,mu,bound_mu,blocker\n";
  if (cfg.format == Format::Text)
    out << std::setw(5) << "q" << std::setw(8) << "dim_V" << std::setw(8) << "bound" << std::setw(14) << "degrees"
        << std::setw(10) << "mu" << std::setw(10) << "bound_mu"
        << "  class\n";
  for (const auto& r : rows) {
    if (!r.ok) {
      err << "error at q = " << r.q << ": " << r.error << "\n";
      status = kExitCheckFailure;
      continue;
    }
    const auto& c = r.cert;
    const bool flagged = !cfg.paper_compat && r.flagged;
    switch (cfg.format) {
      case Format::Csv:
        out << c.q << "," << c.dim << "," << c.bound << ",\"" << c.degree_string() << "\"," << c.mu << ","
            << c.bound_mu << "," << row_class_name(c.row_class) << "\n";
        break;
      case Format::Json:
        arr.push_back(to_json(c, flagged));
        break;
      case Format::Text:
        out << std::setw(5) << c.q << std::setw(8) << c.dim << std::setw(8) << c.bound << std::setw(14)
            << c.degree_string() << std::setw(10) << c.mu << std::setw(10) << c.bound_mu << "  "
            << row_class_name(c.row_class) << (flagged ? "  [flagged]" : "") << "\n";
        break;
    }
  }
  if (cfg.format == Format::Json) out << arr.dump(2) << "\n";
  return status;
}

int cmd_molien(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  const int K = cfg.max_degree > 0 ? cfg.max_degree : default_max_degree(cfg.family);
  const auto input = cfg.family == Family::PSU2 ? psl2_molien_input(*cfg.q, K) : psu3_molien_input(*cfg.q, K);
  const auto m = molien_prefix(input, K);
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["family"] = std::string(family_name(cfg.family));
    j["q"] = *cfg.q;
    std::vector<std::string> coeffs;
    for (const auto& x : m) coeffs.push_back(x.get_str());
    j["coefficients"] = coeffs;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == Format::Csv) {
    out << "k,m_k\n";
    for (size_t k = 0; k < m.size(); ++k) out << k << "," << m[k].get_str() << "\n";
    return kExitOk;
  }
  std::string series;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!series.empty()) series += " + ";
    const std::string coeff = (m[k] == 1 && k > 0) ? "" : m[k].get_str();
    series += k == 0 ? coeff : coeff + "t^" + std::to_string(k);
  }
  out << group_name(cfg.family, *cfg.q) << ": M(t) = " << series << " + O(t^" << K + 1 << ")\n";
  return kExitOk;
}

int cmd_power_table(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  const uint32_t q = *cfg.q;
  const int k = cfg.power;
  TypeMatrix M{};
  std::string label = "computed from representatives";
  const SymbolicPowerTable* sym = nullptr;
  if (cfg.source == "table") {
    if (k < 2 || k > 4) throw Error(ErrorCode::InvalidArgument, "symbolic tables exist for k = 2, 3, 4");
    sym = &select_power_table(q, k);
    M = symbolic_power_table(q, k);
    label = sym->case_label;
  } else {
    M = power_distribution(build_representatives(q), k);
  }
  auto corrected = [&](ClassType src, ClassType dst) {
    if (!sym) return false;
    for (const auto& e : sym->entries)
      if (e.source == src && e.target == dst && e.corrected) return true;
    return false;
  };
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["q"] = q;
    j["k"] = k;
    j["case"] = label;
    ordered_json entries = ordered_json::array();
    for (auto src : kAllTypes)
      for (auto dst : kAllTypes)
        if (M[idx(dst)][idx(src)])
          entries.push_back({{"source", std::string(type_name(src))},
                             {"target", std::string(type_name(dst))},
                             {"count", M[idx(dst)][idx(src)]},
                             {"corrected", corrected(src, dst)}});
    j["entries"] = entries;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "PSU(3," << q << ") k = " << k << " [" << label << "]\n";
  if (cfg.format == Format::Csv) out << "source,target,count,corrected\n";
  for (auto src : kAllTypes)
    for (auto dst : kAllTypes) {
      const int64_t v = M[idx(dst)][idx(src)];
      if (!v) continue;
      if (cfg.format == Format::Csv)
        out << type_name(src) << "," << type_name(dst) << "," << v << "," << (corrected(src, dst) ? 1 : 0) << "\n";
      else
        out << "  " << std::setw(4) << type_name(src) << " -> " << std::setw(4) << type_name(dst) << ": " << v
            << (corrected(src, dst) ? "  (corrected)" : "") << "\n";
    }
  return kExitOk;
}

int cmd_dump_classes(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  const uint32_t q = *cfg.q;
  if (cfg.family == Family::PSU2) {
    const auto cd = sl2_class_data(q);
    ordered_json arr = ordered_json::array();
    if (cfg.format == Format::Text) out << "SL(2," << q << "), order " << cd.group_order << "\n";
    if (cfg.format == Format::Csv) out << "label,size,centralizer_order,element_order\n";
    for (const auto& c : cd.classes) {
      if (cfg.format == Format::Json)
        arr.push_back({{"label", c.label}, {"size", c.size}, {"centralizer_order", c.centralizer_order},
                       {"element_order", c.element_order}});
      else if (cfg.format == Format::Csv)
        out << c.label << "," << c.size << "," << c.centralizer_order << "," << c.element_order << "\n";
      else
        out << "  " << std::setw(6) << c.label << "  size " << c.size << "  centralizer " << c.centralizer_order
            << "  order " << c.element_order << "\n";
    }
    if (cfg.format == Format::Json) out << arr.dump(2) << "\n";
    return kExitOk;
  }
  const auto s = class_spectrum(q);
  const auto reps = build_representatives(q);
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["q"] = q;
    j["d"] = s.d;
    j["order"] = s.group_order.get_str();
    ordered_json types = ordered_json::array();
    for (auto t : kAllTypes)
      types.push_back({{"type", std::string(type_name(t))}, {"count", s.at(t).count},
                       {"centralizer_order", s.at(t).centralizer_order.get_str()}, {"chi_V", s.at(t).chi_v}});
    j["types"] = types;
    ordered_json cls = ordered_json::array();
    for (const auto& r : reps.reps)
      cls.push_back({{"type", std::string(type_name(r.type))}, {"params", r.params}, {"id", r.psu_id}});
    j["classes"] = cls;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == Format::Csv) {
    out << "type,params,id\n";
    for (const auto& r : reps.reps) {
      std::string p;
      for (size_t i = 0; i < r.params.size(); ++i) p += (i ? " " : "") + std::to_string(r.params[i]);
      out << type_name(r.type) << "," << p << "," << r.psu_id << "\n";
    }
    return kExitOk;
  }
  out << "PSU(3," << q << "), d = " << s.d << ", order " << s.group_order.get_str() << ", " << s.total_classes()
      << " classes\n";
  for (auto t : kAllTypes)
    if (s.at(t).count)
      out << "  " << std::setw(4) << type_name(t) << "  count " << std::setw(6) << s.at(t).count << "  centralizer "
          << s.at(t).centralizer_order.get_str() << "  chi_V " << s.at(t).chi_v << "\n";
  return kExitOk;
}

int cmd_dump_chars(const RunConfig& cfg, std::ostream& out) {
  require_q(cfg);
  const auto cd = sl2_class_data(*cfg.q);
  const auto t = sl2_character_table(cd);
  const auto pc = smallest_projective_character(cd, t);
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["q"] = *cfg.q;
    std::vector<std::string> labels;
    for (const auto& c : cd.classes) labels.push_back(c.label);
    j["classes"] = labels;
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
      std::vector<std::string> vals;
      for (const auto& v : t.rows[i]) vals.push_back(v.to_string());
      rows.push_back({{"name", t.names[i]}, {"degree", t.degrees[i]}, {"values", vals}});
    }
    j["characters"] = rows;
    j["selected"] = {{"name", pc.name}, {"degree", pc.degree}, {"note", pc.note}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const std::string sep = cfg.format == Format::Csv ? "," : "  ";
  out << "character" << sep << "degree";
  for (const auto& c : cd.classes) out << sep << c.label;
  out << "\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    out << t.names[i] << sep << t.degrees[i];
    for (const auto& v : t.rows[i]) out << sep << (cfg.format == Format::Csv ? "\"" + v.to_string() + "\"" : v.to_string());
    out << "\n";
  }
  if (cfg.format == Format::Text) {
    out << "selected: " << pc.name << " (degree " << pc.degree << ")\n";
    if (!pc.note.empty()) out << "note: " << pc.note << "\n";
  }
  return kExitOk;
}

int cmd_rd_upper(const RunConfig& cfg, const RdLadder& ladder, std::ostream& out) {
  const int64_t v = ladder.rd_upper(cfg.n, cfg.paper_compat);
  if (cfg.format == Format::Json)
    out << ordered_json{{"n", cfg.n}, {"rd_upper", v}, {"ladder", ladder.source()}}.dump(2) << "\n";
  else
    out << "RD(" << cfg.n << ") <= " << v << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string& t = cfg.target;
  const bool all = t == "all";
  VerifyReport rep;
  auto qmax = [&](uint32_t dflt) { return cfg.q_max ? cfg.q_max : dflt; };
  if (all || t == "spectra") rep.append(verify_spectra(qmax(197)));
  if (all || t == "power-tables") rep.append(verify_power_tables(qmax(197)));
  if (all || t == "molien") rep.append(verify_molien(qmax(197)));
  if (all || t == "chars") rep.append(verify_chars(qmax(125)));
  if (all || t == "oracle") {
    const uint32_t psu3_max = all ? std::min<uint32_t>(5, qmax(5)) : qmax(5);
    rep.append(verify_oracle(psu3_max, std::max<uint32_t>(13, cfg.q_max), 6, cfg.oracle));
  }
  if (cfg.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rep.results)
      arr.push_back({{"suite", r.suite}, {"q", r.q}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
    out << ordered_json{{"checks", rep.results.size()}, {"failures", rep.failures()}, {"results", arr}}.dump(2)
        << "\n";
  } else {
    if (cfg.format == Format::Csv) out << "suite,q,check,result,detail\n";
    for (const auto& r : rep.results) {
      if (cfg.format == Format::Csv)
        out << r.suite << "," << r.q << ",\"" << r.check << "\"," << (r.pass ? "pass" : "FAIL") << ",\"" << r.detail
            << "\"\n";
      else
        out << (r.pass ? "pass " : "FAIL ") << r.suite << " q=" << r.q << " " << r.check
            << (r.pass || r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    if (cfg.format == Format::Text)
      out << rep.results.size() << " checks, " << rep.failures() << " failures\n";
  }
  return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::InvalidArgument || c == ErrorCode::NotPrimePower || c == ErrorCode::NotSimple ||
         c == ErrorCode::UnsupportedQ || c == ErrorCode::LadderFormat;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::unique_ptr<RdLadder> holder;
    const RdLadder& ladder = pick_ladder(cfg, holder);
    const std::string& c = cfg.command;
    if (c == "bound") return cmd_bound(cfg, ladder, out);
    if (c == "table") return cmd_table(cfg, ladder, out, err);
    if (c == "molien") return cmd_molien(cfg, out);
    if (c == "power-table") return cmd_power_table(cfg, out);
    if (c == "dump-classes") return cmd_dump_classes(cfg, out);
    if (c == "dump-chars") return cmd_dump_chars(cfg, out);
    if (c == "rd-upper") return cmd_rd_upper(cfg, ladder, out);
    if (c == "verify") return cmd_verify(cfg, out);
    err << "error: unknown command " << c << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << cfg.command << (cfg.q ? ", q = " + std::to_string(*cfg.q) : "") << "]: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitUsage : kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "error [" << cfg.command << "]: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace rdbound::cli
