#pragma once

// Batch commands behind tools/statechrome. Each command maps a list of corpus
// entries to one JSON record per entry, in input order.

#include "statechrome/statechrome.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <regex>
#include <string>
#include <vector>

namespace statechrome::cli {

struct Settings {
  bool mirror = false;
  int max_crossings = 12;
  unsigned workers = 1;
  ChromaticCache* cache = nullptr;
};

struct Report {
  std::vector<nlohmann::json> records;
  bool failed = false;  // some entry produced an error record
};

// "pretzel(-3,-3,-3)" and "braid(1,1,1)" are accepted next to PD text.
inline LinkDiagram parse_diagram_spec(const std::string& text) {
  static const std::regex gen(R"(^\s*(pretzel|braid)\s*\(([-\d,\s]*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, gen)) return parse_pd(text);
  std::vector<int> args;
  static const std::regex num(R"(-?\d+)");
  const std::string body = m[2];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), num); it != std::sregex_iterator(); ++it)
    args.push_back(std::stoi(it->str()));
  if (args.empty()) throw ParseError("generator needs at least one parameter: " + text);
  return m[1] == "pretzel" ? pretzel(args) : braid_closure(args);
}

inline LinkDiagram entry_diagram(const CorpusEntry& e, const Settings& s) {
  LinkDiagram d = parse_diagram_spec(e.pd);
  if (e.mirror != s.mirror) d = mirror(d);
  return d;
}

inline nlohmann::json poly_json(const IntPolynomial& p) { return {{"coeffs", p.to_json()}, {"text", p.to_string()}}; }
inline nlohmann::json laurent_json(const LaurentPolynomial& p) { return {{"terms", p.to_json()}, {"text", p.to_string()}}; }

inline nlohmann::json error_record(const std::string& name, const std::exception& ex) {
  return {{"name", name}, {"error", ex.what()}};
}

// Runs `body` per entry on the worker pool; exceptions become error records.
template <class F>
Report run_entries(const std::vector<CorpusEntry>& entries, const Settings& s, F body) {
  Report r;
  r.records.resize(entries.size());
  std::vector<char> bad(entries.size(), 0);
  parallel_for(
      entries.size(),
      [&](std::size_t i) {
        try {
          nlohmann::json rec = body(entries[i]);
          rec["name"] = entries[i].name;
          r.records[i] = std::move(rec);
        } catch (const std::exception& ex) {
          r.records[i] = error_record(entries[i].name, ex);
          bad[i] = 1;
        }
      },
      s.workers);
  for (char b : bad) r.failed = r.failed || b;
  return r;
}

inline ChromaticOptions chromatic_options(const Settings& s) {
  ChromaticOptions o;
  o.cache = s.cache;
  return o;
}

inline nlohmann::json invariants_of(const LinkDiagram& d, const Settings& s) {
  const Multigraph gp = g_plus(d), gm = g_minus(d);
  nlohmann::json j;
  j["pd"] = d.to_pd();
  j["crossings"] = d.num_crossings();
  j["components"] = d.components();
  j["c_plus"] = d.c_plus();
  j["c_minus"] = d.c_minus();
  j["s_plus"] = all_positive_state(d).size();
  j["s_minus"] = all_negative_state(d).size();
  j["N"] = n_grading(d);
  j["g_plus"] = census(gp).to_json();
  j["g_minus"] = census(gm).to_json();
  j["g_plus"]["edges"] = gp.to_json();
  j["g_minus"]["edges"] = gm.to_json();
  j["chromatic_g_plus"] = poly_json(chromatic_polynomial(gp, chromatic_options(s)));
  return j;
}

inline Report cmd_invariants(const std::vector<CorpusEntry>& entries, const Settings& s) {
  return run_entries(entries, s, [&](const CorpusEntry& e) { return invariants_of(entry_diagram(e, s), s); });
}

inline nlohmann::json jones_tail_json(const std::vector<BigInt>& beta) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& b : beta) a.push_back(b.str());
  return a;
}

inline nlohmann::json predict_of(const LinkDiagram& d) {
  nlohmann::json j;
  const GraphStats gp = census(g_plus(d));
  if (gp.girth <= 2) {
    j["status"] = "girth too small";
    j["girth"] = gp.girth;
  } else {
    j["status"] = "ok";
    j["tail"] = kh_extremal_prediction(d).to_json();
    j["jones_tail"] = jones_tail_json(jones_tail(gp.p1, gp.girth, gp.n_at(gp.girth), d.c_minus()));
  }
  const GraphStats gm = census(g_minus(d));
  if (gm.girth > 2) {
    j["head"] = kh_head_prediction(d).to_json();
    j["jones_head"] = jones_tail_json(jones_head(gm.p1, gm.girth, gm.n_at(gm.girth), d.c_plus()));
  }
  return j;
}

inline Report cmd_predict(const std::vector<CorpusEntry>& entries, const Settings& s) {
  return run_entries(entries, s, [&](const CorpusEntry& e) { return predict_of(entry_diagram(e, s)); });
}

inline nlohmann::json diff_json(const std::vector<TableDiff>& diffs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& d : diffs)
    a.push_back({{"i", d.i},
                 {"j", d.j},
                 {"expected", {{"rank", d.expected.free}, {"tor2", d.expected.tor2}}},
                 {"actual", {{"rank", d.actual.free}, {"tor2", d.actual.tor2}}}});
  return a;
}

inline nlohmann::json verify_of(const LinkDiagram& d, const Settings& s) {
  KhovanovOptions ko;
  ko.max_crossings = s.max_crossings;
  const BigradedTable kh = khovanov_homology(d, ko);
  nlohmann::json j;
  j["kh"] = kh.to_json();
  const LaurentPolynomial jones = jones_state_sum(d);
  j["jones_matches_euler"] = jones == euler_characteristic(kh);
  const GraphStats gp = census(g_plus(d));
  j["girth"] = gp.girth;
  bool ok = jones == euler_characteristic(kh);
  if (gp.girth > 2) {
    auto diffs = compare_prediction(kh_extremal_prediction(d), kh);
    j["diff"] = diff_json(diffs);
    ok = ok && diffs.empty();
  } else {
    j["status"] = "girth too small";
  }
  if (gp.girth >= 2) {
    const Multigraph g = g_plus(d);
    auto diffs = correspondence_diff(d, kh, g, chromatic_homology(g, chromatic_options(s)));
    j["correspondence_diff"] = diff_json(diffs);
    ok = ok && diffs.empty();
  }
  j["ok"] = ok;
  return j;
}

inline Report cmd_verify(const std::vector<CorpusEntry>& entries, const Settings& s) {
  Report r = run_entries(entries, s, [&](const CorpusEntry& e) { return verify_of(entry_diagram(e, s), s); });
  for (const auto& rec : r.records)
    if (rec.contains("ok") && !rec["ok"].get<bool>()) r.failed = true;
  return r;
}

// One GirthReport per name group ("K", "K@kinked", ... share group "K").
// Kh and Jones come from the first diagram of the group within budget.
inline Report cmd_girth(const std::vector<CorpusEntry>& entries, const Settings& s) {
  std::map<std::string, std::vector<const CorpusEntry*>> groups;
  std::vector<std::string> order;
  for (const auto& e : entries) {
    if (!groups.count(e.group())) order.push_back(e.group());
    groups[e.group()].push_back(&e);
  }
  Report r;
  r.records.resize(order.size());
  std::vector<char> bad(order.size(), 0);
  parallel_for(
      order.size(),
      [&](std::size_t gi) {
        const auto& members = groups[order[gi]];
        try {
          std::vector<LinkDiagram> ds;
          GirthInputs in;
          for (const auto* e : members) {
            ds.push_back(entry_diagram(*e, s));
            if (e->signature && !in.sigma) in.sigma = s.mirror != e->mirror ? -*e->signature : *e->signature;
          }
          const LinkDiagram& first = ds.front();
          in.jones = normalize_jones(jones_state_sum(first));
          if (first.num_crossings() <= s.max_crossings) {
            KhovanovOptions ko;
            ko.max_crossings = s.max_crossings;
            in.kh = khovanov_homology(first, ko);
            if (!is_thin(*in.kh)) in.jones.reset();
          }
          nlohmann::json rec = girth_report(ds, in).to_json();
          rec["name"] = order[gi];
          rec["diagrams"] = members.size();
          r.records[gi] = std::move(rec);
        } catch (const std::exception& ex) {
          r.records[gi] = error_record(order[gi], ex);
          bad[gi] = 1;
        }
      },
      s.workers);
  for (char b : bad) r.failed = r.failed || b;
  return r;
}

inline Report cmd_kh(const std::vector<CorpusEntry>& entries, const Settings& s) {
  return run_entries(entries, s, [&](const CorpusEntry& e) {
    KhovanovOptions ko;
    ko.max_crossings = s.max_crossings;
    const BigradedTable t = khovanov_homology(entry_diagram(e, s), ko);
    return nlohmann::json{{"kh", t.to_json()}, {"text", t.to_text()}};
  });
}

inline Report cmd_jones(const std::vector<CorpusEntry>& entries, const Settings& s) {
  return run_entries(entries, s, [&](const CorpusEntry& e) {
    const LinkDiagram d = entry_diagram(e, s);
    const LaurentPolynomial j = jones_state_sum(d);
    nlohmann::json rec{{"unnormalized", laurent_json(j)}};
    if (d.components() + d.free_loops() > 0) rec["normalized"] = laurent_json(normalize_jones(j));
    return rec;
  });
}

// Graph given as edge-list text ("v m" then m pairs).
inline nlohmann::json graph_report(const Multigraph& g, const Settings& s) {
  nlohmann::json j;
  j["stats"] = census(g).to_json();
  const IntPolynomial p = chromatic_polynomial(g, chromatic_options(s));
  j["chromatic"] = poly_json(p);
  j["chromatic_homology"] = chromatic_homology(g, chromatic_options(s)).to_json();
  j["canonical"] = canonical_code(g);
  return j;
}

}  // namespace statechrome::cli
