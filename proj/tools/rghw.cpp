// Command-line front end: reproduction targets with embedded reference
// values, parameterized bound/oracle/scheme runs, CSV/JSON output.
//
// Exit codes: 0 all values match their references, 2 reference mismatch,
// 3 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rghw/ag_bounds.hpp"
#include "rghw/codes.hpp"
#include "rghw/combinatorics.hpp"
#include "rghw/fengrao.hpp"
#include "rghw/field.hpp"
#include "rghw/fixtures.hpp"
#include "rghw/hermitian.hpp"
#include "rghw/ramp.hpp"
#include "rghw/semigroup.hpp"

using json = nlohmann::json;
using namespace rghw;

namespace {

struct ReportRow {
  std::string id;
  long value = 0;
  std::optional<long> expected;
  bool match = true;
  std::string note;
};

struct Report {
  std::vector<ReportRow> rows;

  void add(std::string id, long value, std::optional<long> expected = std::nullopt,
           std::string note = {}) {
    bool match = !expected || *expected == value;
    rows.push_back({std::move(id), value, expected, match, std::move(note)});
  }
  bool all_match() const {
    for (const auto& r : rows)
      if (!r.match) return false;
    return true;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "id,value,expected,match,note\n";
    for (const auto& r : rows) {
      os << r.id << ',' << r.value << ',';
      if (r.expected) os << *r.expected;
      os << ',' << (r.match ? "yes" : "NO") << ',' << r.note << '\n';
    }
    return os.str();
  }
  std::string to_json() const {
    json out = json::array();
    for (const auto& r : rows) {
      json j{{"id", r.id}, {"value", r.value}, {"match", r.match}};
      if (r.expected) j["expected"] = *r.expected;
      if (!r.note.empty()) j["note"] = r.note;
      out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
};

std::string format = "csv";
std::string out_path;

int emit(const Report& rep) {
  std::string text = format == "json" ? rep.to_json() : rep.to_csv();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
  return rep.all_match() ? 0 : 2;
}

std::string vec_to_string(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// ---------------------------------------------------------------- reproduce

void reproduce_lemma9(Report& rep) {
  for (long a = 2; a <= 8; ++a) {
    NumericalSemigroup g({a, a + 1});
    for (long mu = 1; mu <= a + 1; ++mu)
      for (int m = 1; m <= mu; ++m) {
        std::ostringstream id;
        id << "lemma9-a" << a << "-mu" << mu << "-m" << m;
        rep.add(id.str(), z_function(g, mu, m), z_closed_form(a, mu, m));
      }
  }
}

void reproduce_ex1(Report& rep) {
  HermitianFamily fam = HermitianFamily::build(4);
  for (int m = 1; m <= 3; ++m) {
    rep.add("ex1-closed-m" + std::to_string(m),
            rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), 12, 8, m,
                                BoundTier::Closed),
            fixtures::kEx1Closed[m - 1]);
    rep.add("ex1-shifted-m" + std::to_string(m),
            rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), 12, 8, m,
                                BoundTier::Shifted),
            fixtures::kEx1Shifted[m - 1]);
  }
}

void reproduce_ex2(Report& rep) {
  HermitianFamily fam = HermitianFamily::build(4);
  for (int m = 1; m <= 3; ++m) {
    rep.add("ex2-closed-m" + std::to_string(m),
            rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), 10, 5, m,
                                BoundTier::Closed),
            fixtures::kEx2Closed[m - 1]);
    rep.add("ex2-shifted-m" + std::to_string(m),
            rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), 10, 5, m,
                                BoundTier::Shifted),
            fixtures::kEx2Closed[m - 1]);
  }
}

void reproduce_ex3(Report& rep) {
  NumericalSemigroup h({4, 5});
  std::vector<long> fixture = fixtures::ex3_hstar();
  for (int m = 1; m <= 3; ++m)
    rep.add("ex3-dualset-m" + std::to_string(m),
            rghw_bound_onepoint(fixture, h, 69, 65, m, BoundTier::ExactSet),
            fixtures::kEx3Values[m - 1]);
  // the published growth-order tail disagrees with the rank oracle; record
  // the difference without failing
  HermitianFamily fam = HermitianFamily::build(4);
  const auto& actual = fam.h_star();
  std::vector<long> actual_tail(actual.end() - 9, actual.end());
  rep.add("ex3-hstar-tail-discrepancy", 1, std::nullopt,
          "published tail: " + vec_to_string(fixtures::kEx3Tail) +
              "; rank-oracle tail: " + vec_to_string(actual_tail));
}

void reproduce_ex4(Report& rep) {
  long n = 512, mu = n - 130;
  LeakageProfile p = hermitian_profile_closed(8, mu, 9);
  rep.add("ex4-t1", p.t[0], fixtures::kEx4T1);
  rep.add("ex4-r1", p.r[0], fixtures::kEx4R1);
  rep.add("ex4-t3+1", p.t[2] + 1, fixtures::kEx4T3Plus1);
  rep.add("ex4-r3", p.r[2], fixtures::kEx4R3);
  rep.add("ex4-t9+1", p.t[8] + 1, fixtures::kEx4T9Plus1);
  rep.add("ex4-r9", p.r[8], fixtures::kEx4R9);
}

void reproduce_ex5(Report& rep) {
  rep.add("ex5-g1-16", ramp_g1(16, 16), 135);
  rep.add("ex5-g2-16", ramp_g2(16, 16, 16), 255);
  rep.add("ex5-r1-offset", ramp_g2(16, 16, 1), 120);
  rep.add("ex5-t11-offset", ramp_g1(16, 11), 115);
}

void reproduce_table1(Report& rep) {
  for (const auto& row : fixtures::kTable1)
    for (size_t i = 0; i < row.values.size(); ++i) {
      int m = static_cast<int>(i) + 3;
      std::ostringstream id;
      id << "table1-q" << row.q << "-m" << m;
      rep.add(id.str(), diff_value(row.q, m), row.values[i]);
    }
}

void reproduce_table2(Report& rep) {
  for (int m = 1; m <= 9; ++m) {
    rep.add("table2-g1-m" + std::to_string(m), ramp_g1(8, m),
            fixtures::kTable2G1[m - 1]);
    rep.add("table2-g2-m" + std::to_string(m), ramp_g2(8, 9, m),
            fixtures::kTable2G2[m - 1]);
  }
}

void reproduce_table3(Report& rep) {
  for (int m = 1; m <= 16; ++m) {
    rep.add("table3-g1-m" + std::to_string(m), ramp_g1(16, m),
            fixtures::kTable3G1[m - 1]);
    rep.add("table3-g2-m" + std::to_string(m), ramp_g2(16, 16, m),
            fixtures::kTable3G2[m - 1]);
  }
}

void reproduce_table4(Report& rep) {
  HermitianFamily fam = HermitianFamily::build(4);
  const auto& hs = fam.h_star();
  long n = fam.n();
  for (int s = 1; s <= 62; ++s) {
    long mu1 = hs[s + 1];
    long mu2 = s == 1 ? -1 : hs[s - 2];
    const fixtures::Table4Row* fixture = nullptr;
    for (const auto& row : fixtures::kTable4)
      if (row.mu1 == mu1) fixture = &row;
    LeakageProfile p = hermitian_profile_bound(fam, mu1, mu2);
    for (int m = 1; m <= 3; ++m) {
      long exp_t = fixture ? fixture->t[m - 1]
                           : n - mu1 + fixtures::kTable4ResidualT[m - 1];
      long exp_r = fixture ? fixture->r[m - 1]
                           : n - mu1 + fixtures::kTable4ResidualR[m - 1];
      std::ostringstream base;
      base << "table4-mu1_" << mu1 << "-m" << m;
      rep.add(base.str() + "-t", p.t[m - 1], exp_t);
      rep.add(base.str() + "-r", p.r[m - 1], exp_r);
    }
  }
}

void reproduce_ex6(Report& rep) {
  HermitianFamily fam = HermitianFamily::build(4);
  const NumericalSemigroup& h = fam.weierstrass();
  std::vector<long> expected;
  for (long x = 0; x <= 63; ++x)
    if (h.contains(x)) expected.push_back(x);
  for (long x : {65L, 66L, 67L, 70L, 71L, 75L}) expected.push_back(x);
  rep.add("ex6-hstar", fam.h_star() == expected ? 1 : 0, 1);
  // self-duality pairing across the listed (mu1, mu2) sequence
  const auto& hs = fam.h_star();
  bool all_dual = true;
  for (int s = 1; s <= 62; ++s) {
    long mu2 = s == 1 ? -1 : hs[s - 2];
    long partner_mu1 = hs[(63 - s) + 1];
    LinearCode lhs = mu2 < 0 ? LinearCode::full(fam.field(), 64)
                             : fam.code(mu2).dual();
    if (lhs != fam.code(partner_mu1)) all_dual = false;
  }
  rep.add("ex6-dual-pairing", all_dual ? 1 : 0, 1);
}

void reproduce_mds(Report& rep) {
  const FiniteField& f = FiniteField::get(2, 3);
  MdsScheme s = mds_scheme(f, 5, 3, 1);
  for (int m = 1; m <= 2; ++m) {
    rep.add("mds-primary-m" + std::to_string(m),
            rghw_oracle(s.scheme.c1(), s.scheme.c2(), m), 2 + m);
    rep.add("mds-dual-m" + std::to_string(m),
            rghw_oracle(s.scheme.c2().dual(), s.scheme.c1().dual(), m), 1 + m);
  }
  rep.add("mds-t1", s.profile.t[0], 1);
  rep.add("mds-r-ell", s.profile.r[1], 3);
  rep.add("mds-t-step", s.profile.t[1] - s.profile.t[0], 1);
}

void run_reproduce(Report& rep, const std::string& target) {
  if (target == "lemma9") reproduce_lemma9(rep);
  else if (target == "ex1") reproduce_ex1(rep);
  else if (target == "ex2") reproduce_ex2(rep);
  else if (target == "ex3") reproduce_ex3(rep);
  else if (target == "ex4") reproduce_ex4(rep);
  else if (target == "ex5") reproduce_ex5(rep);
  else if (target == "ex6") reproduce_ex6(rep);
  else if (target == "table1") reproduce_table1(rep);
  else if (target == "table2") reproduce_table2(rep);
  else if (target == "table3") reproduce_table3(rep);
  else if (target == "table4") reproduce_table4(rep);
  else if (target == "mds") reproduce_mds(rep);
  else throw CLI::ValidationError("unknown reproduce target: " + target);
}

// ------------------------------------------------------------------- other

LinearCode load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open code file: " + path);
  return read_code(f);
}

GfVector parse_secret(const FiniteField& f, const std::string& text) {
  GfVector out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    long v = std::stol(tok);
    if (v < 0 || v >= static_cast<long>(f.order()))
      throw std::runtime_error("secret entry out of field range");
    out.push_back(static_cast<Word>(v));
  }
  return out;
}

void add_profile(Report& rep, const std::string& prefix, const LeakageProfile& p) {
  for (int m = 1; m <= p.ell; ++m) {
    bool te = p.t_tag[m - 1] == ProvenanceTag::Exact;
    bool re = p.r_tag[m - 1] == ProvenanceTag::Exact;
    rep.add(prefix + "-t" + std::to_string(m), p.t[m - 1], std::nullopt,
            te ? "exact" : "lower-bound");
    rep.add(prefix + "-r" + std::to_string(m), p.r[m - 1], std::nullopt,
            re ? "exact" : "upper-bound");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative generalized Hamming weights and ramp schemes"};
  app.require_subcommand(1);
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path);

  // reproduce
  std::string target;
  auto* rep_cmd = app.add_subcommand("reproduce", "re-run a published scenario");
  rep_cmd->add_option("target", target)->required();

  // bound
  std::string b_family = "hermitian", b_tier = "all";
  int b_q = 4, b_m = 1;
  long b_mu1 = 0, b_mu2 = -1;
  auto* bound_cmd = app.add_subcommand("bound", "lower bound on a relative weight");
  bound_cmd->add_option("--family", b_family)->check(CLI::IsMember({"hermitian"}));
  bound_cmd->add_option("--q", b_q)->required();
  bound_cmd->add_option("--mu1", b_mu1)->required();
  bound_cmd->add_option("--mu2", b_mu2);
  bound_cmd->add_option("--m", b_m)->required();
  bound_cmd->add_option("--tier", b_tier)
      ->check(CLI::IsMember({"closed", "shifted", "exact", "dual", "all"}));

  // oracle
  std::string o_file1, o_file2;
  int o_m = 1;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact relative weight by search");
  oracle_cmd->add_option("--code-file", o_file1)->required();
  oracle_cmd->add_option("--code2-file", o_file2);
  oracle_cmd->add_option("--m", o_m)->required();

  // scheme
  bool s_mds = false;
  int s_q = 8, s_n = 5, s_k1 = 3, s_k2 = 1;
  auto* scheme_cmd = app.add_subcommand("scheme", "ramp scheme construction");
  scheme_cmd->add_flag("--mds", s_mds);
  scheme_cmd->add_option("--q", s_q);
  scheme_cmd->add_option("--n", s_n);
  scheme_cmd->add_option("--k1", s_k1);
  scheme_cmd->add_option("--k2", s_k2);
  auto* scheme_profile = scheme_cmd->add_subcommand("profile", "thresholds");

  // hermitian
  int h_q = 4, h_m = 1;
  long h_mu = 0, h_mu1 = 0, h_mu2 = -1;
  std::string h_tier = "all";
  auto* herm_cmd = app.add_subcommand("hermitian", "Hermitian-curve tools");
  herm_cmd->add_option("--q", h_q)->required();
  auto* herm_code = herm_cmd->add_subcommand("code", "evaluation code");
  herm_code->add_option("--mu", h_mu)->required();
  auto* herm_rghw = herm_cmd->add_subcommand("rghw", "relative weight bounds");
  herm_rghw->add_option("--mu1", h_mu1)->required();
  herm_rghw->add_option("--mu2", h_mu2);
  herm_rghw->add_option("--m", h_m)->required();
  herm_rghw->add_option("--tier", h_tier);
  auto* herm_diff = herm_cmd->add_subcommand("diff-table", "relative-vs-absolute gaps");

  // ramp
  std::string r_family = "hermitian", r_secret, r_shares, r_mode = "bound";
  int r_q = 4;
  long r_mu1 = 0, r_mu2 = -1, r_mu_tilde = 0;
  std::uint64_t r_seed = 0;
  auto* ramp_cmd = app.add_subcommand("ramp", "ramp secret sharing");
  ramp_cmd->add_option("--family", r_family)->check(CLI::IsMember({"hermitian"}));
  ramp_cmd->add_option("--q", r_q);
  ramp_cmd->add_option("--mu1", r_mu1);
  ramp_cmd->add_option("--mu2", r_mu2);
  auto* ramp_profile = ramp_cmd->add_subcommand("profile", "thresholds");
  ramp_profile->add_option("--mode", r_mode)
      ->check(CLI::IsMember({"bound", "oracle", "closed"}));
  ramp_profile->add_option("--mu-tilde", r_mu_tilde);
  auto* ramp_share = ramp_cmd->add_subcommand("share", "deal shares");
  ramp_share->add_option("--secret", r_secret)->required();
  ramp_share->add_option("--seed", r_seed);
  auto* ramp_rec = ramp_cmd->add_subcommand("reconstruct", "recover from shares");
  ramp_rec->add_option("--shares", r_shares)->required();

  try {
    app.parse(argc, argv);

    Report rep;
    if (*rep_cmd) {
      run_reproduce(rep, target);
    } else if (*bound_cmd) {
      HermitianFamily fam = HermitianFamily::build(b_q);
      auto one = [&](BoundTier tier, const std::string& name) {
        rep.add("bound-" + name,
                rghw_bound_onepoint(fam.h_star(), fam.weierstrass(), b_mu1, b_mu2,
                                    b_m, tier),
                std::nullopt, "lower-bound");
      };
      if (b_tier == "closed" || b_tier == "all") one(BoundTier::Closed, "closed");
      if (b_tier == "shifted" || b_tier == "all") one(BoundTier::Shifted, "shifted");
      if (b_tier == "exact" || b_tier == "all") one(BoundTier::ExactSet, "exact");
      if (b_tier == "dual" || b_tier == "all")
        rep.add("bound-dual",
                rghw_bound_onepoint_dual(fam.h_star(), fam.weierstrass(), b_mu1,
                                         b_mu2, b_m),
                std::nullopt, "lower-bound");
    } else if (*oracle_cmd) {
      LinearCode c1 = load_code(o_file1);
      LinearCode c2 = o_file2.empty() ? LinearCode::zero(c1.field(), c1.length())
                                      : load_code(o_file2);
      rep.add("oracle-m" + std::to_string(o_m), rghw_oracle(c1, c2, o_m),
              std::nullopt, "exact");
    } else if (*scheme_cmd) {
      if (!s_mds) throw CLI::ValidationError("only --mds schemes are supported here");
      MdsScheme s = mds_scheme(FiniteField::get_order(s_q), s_n, s_k1, s_k2);
      if (*scheme_profile) add_profile(rep, "mds", s.profile);
    } else if (*herm_cmd) {
      if (*herm_diff) {
        auto vals = diff_table(h_q);
        for (size_t i = 0; i < vals.size(); ++i)
          rep.add("diff-q" + std::to_string(h_q) + "-m" + std::to_string(i + 3),
                  vals[i]);
      } else {
        HermitianFamily fam = HermitianFamily::build(h_q);
        if (*herm_code) {
          rep.add("code-dim", fam.code_dim(h_mu));
          if (!out_path.empty()) {
            std::ofstream f(out_path);
            write_code(f, fam.code(h_mu));
            out_path.clear();  // already consumed
          }
        } else if (*herm_rghw) {
          auto r = fam.rghw(h_mu1, h_mu2, h_m);
          if (r.closed)
            rep.add("rghw-closed", *r.closed, std::nullopt,
                    r.equality ? "exact" : "lower-bound");
          else
            rep.add("rghw-closed-unavailable", 0, std::nullopt,
                    "codimension above q+1; closed form not applicable");
          rep.add("rghw-best", r.best, std::nullopt,
                  r.equality ? "exact" : "lower-bound");
        } else {
          throw CLI::ValidationError("hermitian requires a subcommand");
        }
      }
    } else if (*ramp_cmd) {
      if (*ramp_profile) {
        if (r_mode == "closed") {
          long mu_tilde = r_mu_tilde ? r_mu_tilde : r_mu1 - r_mu2;
          add_profile(rep, "ramp",
                      hermitian_profile_closed(r_q, r_mu1, mu_tilde));
        } else {
          HermitianFamily fam = HermitianFamily::build(r_q);
          if (r_mode == "oracle")
            add_profile(rep, "ramp",
                        hermitian_scheme(fam, r_mu1, r_mu2).profile_oracle());
          else
            add_profile(rep, "ramp", hermitian_profile_bound(fam, r_mu1, r_mu2));
        }
      } else if (*ramp_share) {
        HermitianFamily fam = HermitianFamily::build(r_q);
        RampScheme s = hermitian_scheme(fam, r_mu1, r_mu2);
        GfVector secret = parse_secret(s.field(), r_secret);
        GfVector x = s.share(secret, r_seed);
        json shares = json::object();
        for (size_t i = 0; i < x.size(); ++i) shares[std::to_string(i)] = x[i];
        if (out_path.empty()) {
          std::cout << shares.dump(2) << "\n";
        } else {
          std::ofstream f(out_path);
          f << shares.dump(2) << "\n";
          out_path.clear();
        }
        return 0;
      } else if (*ramp_rec) {
        HermitianFamily fam = HermitianFamily::build(r_q);
        RampScheme s = hermitian_scheme(fam, r_mu1, r_mu2);
        std::ifstream f(r_shares);
        if (!f) throw std::runtime_error("cannot open share file: " + r_shares);
        json shares = json::parse(f);
        std::vector<std::pair<int, Word>> observed;
        for (auto& [k, v] : shares.items())
          observed.emplace_back(std::stoi(k), v.get<Word>());
        auto rec = s.reconstruct(observed);
        rep.add("determined", rec.determined, std::nullopt,
                rec.full() ? "full secret" : "partial");
        for (size_t i = 0; i < rec.base_secret.size(); ++i)
          rep.add("secret-" + std::to_string(i), rec.base_secret[i], std::nullopt,
                  rec.full() ? "exact" : "one consistent value");
      } else {
        throw CLI::ValidationError("ramp requires a subcommand");
      }
    }
    return emit(rep);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
