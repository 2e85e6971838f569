#include "rdbound/report.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rdbound/molien.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/psu3_data.hpp"
#include "rdbound/psu3_reps.hpp"
#include "rdbound/sl2_chars.hpp"

namespace rdbound {

namespace {

std::string num(const Integer& z) { return z.get_str(); }

// Prime powers where SU(3,q) class data is defined (q >= 2).
std::vector<uint32_t> psu3_qs(uint32_t q_max) { return prime_powers_up_to(2, q_max); }

}  // namespace

void VerifyReport::add(std::string suite, uint32_t q, std::string check, bool pass, std::string detail) {
  results.push_back({std::move(suite), q, std::move(check), pass, std::move(detail)});
}

size_t VerifyReport::failures() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
}

void VerifyReport::append(const VerifyReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

VerifyReport verify_power_tables(uint32_t q_max) {
  VerifyReport rep;
  for (uint32_t q : psu3_qs(q_max)) {
    try {
      const auto spec = class_spectrum(q);
      const auto reps = build_representatives(q);
      for (int k = 2; k <= 4; ++k) {
        const auto sym = symbolic_power_table(q, k);
        TypeMatrix got{};
        std::string detail;
        bool same = true;
        try {
          got = power_distribution(reps, k);
        } catch (const std::exception& e) {
          same = false;
          detail = e.what();
        }
        bool sums = true;
        for (auto src : kAllTypes) {
          int64_t col = 0;
          for (auto dst : kAllTypes) {
            col += sym[idx(dst)][idx(src)];
            if (same && got[idx(dst)][idx(src)] != sym[idx(dst)][idx(src)]) {
              same = false;
              detail = std::string(type_name(src)) + "->" + std::string(type_name(dst)) + ": representatives " +
                       std::to_string(got[idx(dst)][idx(src)]) + ", table " + std::to_string(sym[idx(dst)][idx(src)]);
            }
          }
          if (col != spec.at(src).count) {
            sums = false;
            detail += std::string(detail.empty() ? "" : "; ") + "column " + std::string(type_name(src)) + " sums to " +
                      std::to_string(col) + ", expected " + std::to_string(spec.at(src).count);
          }
        }
        const auto& table = select_power_table(q, k);
        rep.add("power-tables", q, "k=" + std::to_string(k) + " [" + table.case_label + "]", same && sums, detail);
      }
    } catch (const std::exception& e) {
      rep.add("power-tables", q, "build", false, e.what());
    }
  }
  return rep;
}

VerifyReport verify_spectra(uint32_t q_max) {
  VerifyReport rep;
  for (uint32_t q : psu3_qs(q_max)) {
    const auto s = class_spectrum(q);
    Rational size_sum = 0, norm = 0, mean = 0;
    for (auto t : kAllTypes) {
      const auto& td = s.at(t);
      if (td.count == 0) continue;
      const Rational inv(Integer(1), td.centralizer_order);
      size_sum += Rational(s.group_order * td.count, td.centralizer_order);
      norm += inv * td.count * td.chi_v * td.chi_v;
      mean += inv * td.count * td.chi_v;
    }
    size_sum.canonicalize();
    norm.canonicalize();
    mean.canonicalize();
    rep.add("spectra", q, "class equation", size_sum == Rational(s.group_order),
            "sum of class sizes " + size_sum.get_str() + ", |G| = " + num(s.group_order));
    rep.add("spectra", q, "chi_V norm 1", norm == 1, "<chi,chi> = " + norm.get_str());
    rep.add("spectra", q, "chi_V mean 0", mean == 0, "<chi,1> = " + mean.get_str());
  }
  return rep;
}

VerifyReport verify_molien(uint32_t q_max) {
  VerifyReport rep;
  for (uint32_t q : psu3_qs(q_max)) {
    if (q < 3) continue;
    try {
      const Integer closed = closed_form_m4(q);
      const auto sym = psu3_symbolic_prefix(q);
      const auto fromreps = molien_prefix(psu3_molien_input(q, 4), 4);
      auto describe = [](const std::vector<Integer>& m) {
        std::string s;
        for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + m[i].get_str();
        return s;
      };
      for (const auto& [route, m] : {std::pair{"symbolic", sym}, std::pair{"representatives", fromreps}}) {
        const bool ok = m.size() >= 5 && m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 0 && m[4] == closed;
        rep.add("molien", q, std::string(route) + " m0..m4", ok,
                "m = " + describe(m) + ", closed form m4 = " + closed.get_str());
      }
    } catch (const std::exception& e) {
      rep.add("molien", q, "prefix", false, e.what());
    }
  }
  return rep;
}

VerifyReport verify_chars(uint32_t q_max) {
  VerifyReport rep;
  for (uint32_t q : prime_powers_up_to(2, q_max)) {
    try {
      const auto cd = sl2_class_data(q);
      const auto t = sl2_character_table(cd, false);
      std::string detail;
      bool orth = true;
      try {
        check_orthogonality(cd, t);
      } catch (const std::exception& e) {
        orth = false;
        detail = e.what();
      }
      rep.add("chars", q, "row and column orthogonality", orth, detail);
      Integer sq = 0;
      for (int64_t d : t.degrees) sq += Integer(d) * d;
      rep.add("chars", q, "sum of squared degrees", sq == Integer(cd.group_order),
              sq.get_str() + " vs |G| = " + std::to_string(cd.group_order));
      rep.add("chars", q, "table is square", t.rows.size() == cd.classes.size(),
              std::to_string(t.rows.size()) + " characters, " + std::to_string(cd.classes.size()) + " classes");
    } catch (const std::exception& e) {
      rep.add("chars", q, "table", false, e.what());
    }
  }
  return rep;
}

namespace {

void oracle_psu3(VerifyReport& rep, uint32_t q, int max_power, const OracleOptions& opts) {
  const auto spec = class_spectrum(q);
  const auto G = quotient_by_center(enumerate_group(GroupKind::SU3, q, opts));
  const auto P = conjugacy_classes(G);
  rep.add("oracle", q, "PSU(3,q) order", Integer(G.order()) == spec.group_order,
          std::to_string(G.order()) + " vs " + num(spec.group_order));
  rep.add("oracle", q, "PSU(3,q) class count", static_cast<int64_t>(P.classes.size()) == spec.total_classes(),
          std::to_string(P.classes.size()) + " vs " + std::to_string(spec.total_classes()));

  // Type of each oracle class via the matrix classifier; its centralizer must agree with the type data.
  std::vector<int> label;
  std::array<int64_t, kNumTypes> seen{};
  bool cent_ok = true, type_ok = true;
  std::string detail;
  for (const auto& c : P.classes) {
    int t = -1;
    try {
      t = idx(identify_type(*G.field, q, G.decode3(c.rep)));
    } catch (const std::exception& e) {
      type_ok = false;
      detail = e.what();
    }
    label.push_back(std::max(t, 0));
    if (t < 0) continue;
    ++seen[t];
    if (Integer(c.centralizer_order) != spec.types[t].centralizer_order) {
      cent_ok = false;
      detail = std::string(type_name(kAllTypes[t])) + " centralizer " + std::to_string(c.centralizer_order) +
               " vs " + num(spec.types[t].centralizer_order);
    }
  }
  for (auto t : kAllTypes)
    if (seen[idx(t)] != spec.at(t).count) {
      type_ok = false;
      detail = std::string(type_name(t)) + ": " + std::to_string(seen[idx(t)]) + " classes vs " +
               std::to_string(spec.at(t).count);
    }
  rep.add("oracle", q, "PSU(3,q) centralizer orders", cent_ok && type_ok, detail);

  const auto reps = build_representatives(q);
  for (int k = 2; k <= max_power; ++k) {
    const auto D = power_distribution_oracle(G, P, k, label, kNumTypes);
    const auto R = power_distribution(reps, k);
    bool ok = true;
    std::string d;
    for (auto dst : kAllTypes)
      for (auto src : kAllTypes) {
        const int64_t o = D[idx(dst)][idx(src)];
        int64_t want = R[idx(dst)][idx(src)];
        if (k <= 4 && symbolic_power_table(q, k)[idx(dst)][idx(src)] != want) ok = false;
        if (o != want) {
          ok = false;
          d = std::string(type_name(src)) + "->" + std::string(type_name(dst)) + ": oracle " + std::to_string(o) +
              ", pipeline " + std::to_string(want);
        }
      }
    rep.add("oracle", q, "PSU(3,q) power distribution k=" + std::to_string(k), ok, d);
  }
}

void oracle_sl2(VerifyReport& rep, uint32_t q, const OracleOptions& opts) {
  const auto cd = sl2_class_data(q);
  const auto G = enumerate_group(GroupKind::SL2, q, opts);
  const auto P = conjugacy_classes(G);
  rep.add("oracle", q, "SL(2,q) class count", P.classes.size() == cd.classes.size(),
          std::to_string(P.classes.size()) + " vs " + std::to_string(cd.classes.size()));
  Sl2Classifier cl(cd, *G.field);
  std::set<int> hit;
  bool data_ok = true, power_ok = true, reps_ok = true;
  std::string detail;
  for (const auto& c : P.classes) {
    const int i = cl.classify(G.decode2(c.rep));
    hit.insert(i);
    const auto& dc = cd.classes[i];
    if (dc.centralizer_order != c.centralizer_order || dc.size != c.size) {
      data_ok = false;
      detail = dc.label + ": centralizer " + std::to_string(c.centralizer_order) + " vs " +
               std::to_string(dc.centralizer_order);
    }
    for (int k = 2; k <= 8; ++k)
      if (cl.classify(G.decode2(G.power(c.rep, k))) != cd.power(i, k)) power_ok = false;
  }
  for (size_t i = 0; i < cd.classes.size(); ++i)
    if (cl.classify(class_representative(cd, *G.field, static_cast<int>(i))) != static_cast<int>(i)) reps_ok = false;
  rep.add("oracle", q, "SL(2,q) class sizes and centralizers", data_ok && hit.size() == cd.classes.size(), detail);
  rep.add("oracle", q, "SL(2,q) power maps k=2..8", power_ok);
  rep.add("oracle", q, "SL(2,q) class representatives", reps_ok);
}

}  // namespace

VerifyReport verify_oracle(uint32_t psu3_q_max, uint32_t sl2_q_max, int max_power, const OracleOptions& opts) {
  VerifyReport rep;
  for (uint32_t q : prime_powers_up_to(2, psu3_q_max)) {
    try {
      oracle_psu3(rep, q, max_power, opts);
    } catch (const std::exception& e) {
      rep.add("oracle", q, "PSU(3,q) enumeration", false, e.what());
    }
  }
  for (uint32_t q : prime_powers_up_to(2, sl2_q_max)) {
    try {
      oracle_sl2(rep, q, opts);
    } catch (const std::exception& e) {
      rep.add("oracle", q, "SL(2,q) enumeration", false, e.what());
    }
  }
  return rep;
}

}  // namespace rdbound
