// Command-line front end. Exit codes: 0 all checks pass, 1 verification mismatch,
// 2 usage or input error, 3 capped or unresolved.

#include <iostream>

#include "CLI11.hpp"
#include "ectors/classification.hpp"
#include "ectors/tables.hpp"

using namespace ectors;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kUnresolved = 3 };

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return kOk;
    case Verdict::Mismatch:
      return kMismatch;
    default:
      return kUnresolved;
  }
}

int status_exit(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return kOk;
    case CheckStatus::Fail:
      return kMismatch;
    case CheckStatus::Unresolved:
      return kUnresolved;
  }
  return kUnresolved;
}

bool input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const TableFormat*>(&e) ||
         dynamic_cast<const Reducible*>(&e) || dynamic_cast<const DegenerateParameter*>(&e) ||
         dynamic_cast<const RootOfUnityMissing*>(&e) || dynamic_cast<const ListNotSorted*>(&e) ||
         dynamic_cast<const SingularCurve*>(&e) || dynamic_cast<const NotOnCurve*>(&e);
}

Json certificate_value(const TorsionCertificate& c) { return Json::parse(certificate_json(c)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of elliptic curves over number fields"};
  app.require_subcommand(1);
  std::string data_dir = default_data_dir();
  app.add_option("--data", data_dir, "directory with the bundled tables and field lists");

  auto* nf = app.add_subcommand("nf", "number field utilities");
  nf->require_subcommand(1);
  auto* nf_disc = nf->add_subcommand("disc", "field discriminant");
  std::string poly;
  nf_disc->add_option("--poly", poly, "defining polynomial")->required();

  auto* curve = app.add_subcommand("curve", "curve utilities");
  curve->require_subcommand(1);
  auto* certify = curve->add_subcommand("certify", "certify a claimed torsion structure");
  std::string field_poly = "x", curve_text, claim_text;
  std::vector<std::string> hint_text;
  std::size_t primes = 3;
  std::uint64_t seed = 0;
  certify->add_option("--field-poly", field_poly, "defining polynomial of K (default Q)");
  certify->add_option("--curve", curve_text, "[a1,a2,a3,a4,a6]")->required();
  certify->add_option("--claim", claim_text, "m,mn")->required();
  certify->add_option("--hint", hint_text, "known point (x,y)");
  certify->add_option("--primes", primes, "minimum number of reduction primes");
  certify->add_option("--seed", seed, "recorded in the output; the certificate is deterministic");

  auto* family = app.add_subcommand("family", "genus-zero families");
  family->require_subcommand(1);
  auto* fmake = family->add_subcommand("make", "build a family member and certify it");
  std::string kind_text, v_text;
  fmake->add_option("--kind", kind_text, "3,3 | 3,6 | 4,4 | 5,5")->required();
  fmake->add_option("--field-poly", field_poly, "defining polynomial of K")->required();
  fmake->add_option("--v", v_text, "parameter, an element of K")->required();

  auto* tables = app.add_subcommand("tables", "bundled tables");
  tables->require_subcommand(1);
  auto* tverify = tables->add_subcommand("verify", "re-check the bundled tables");
  int table_id = 0;
  std::size_t row = 0;
  unsigned jobs = 1;
  bool json_out = false;
  auto* table_opt = tverify->add_option("--table", table_id, "table number 1-9 (default all)")->check(CLI::Range(1, kTableCount));
  auto* row_opt = tverify->add_option("--row", row, "row index within the table");
  tverify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  tverify->add_flag("--json", json_out, "print the report as JSON");
  row_opt->needs(table_opt);

  auto* fields = app.add_subcommand("fields", "field lists");
  fields->require_subcommand(1);
  auto* scan = fields->add_subcommand("scan", "first field of an ascending list meeting a target");
  std::string list_path, target_text;
  std::size_t max = 1000;
  scan->add_option("--list", list_path, "CSV field list")->required();
  scan->add_option("--target", target_text, "growth:X1(15):(1,16) | root:3 | point:X1(14)[:(1,6)][:h=N]")->required();
  scan->add_option("--max", max, "number of entries to examine");

  auto* data = app.add_subcommand("data", "constant data");
  data->require_subcommand(1);
  auto* exp = data->add_subcommand("export", "emit constant data as JSON");
  std::string what;
  exp->add_option("--what", what, "phi | genus | tables")->required()->check(CLI::IsMember({"phi", "genus", "tables"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*nf_disc) {
      NumberField K(parse_polyq(poly));
      std::cout << field_discriminant(K).get_str() << "\n";
      return kOk;
    }
    if (*certify) {
      NumberField K(parse_polyq(field_poly));
      CurveK E = parse_curve(K, curve_text);
      std::vector<PointK> hints;
      for (const auto& h : hint_text) hints.push_back(parse_point(K, h));
      CertifyOptions opt;
      opt.min_primes = std::max<std::size_t>(1, primes);
      opt.max_primes = std::max(opt.max_primes, opt.min_primes);
      TorsionCertificate c = certify_torsion(E, parse_structure(claim_text), hints, opt);
      Json out = certificate_value(c);
      out["seed"] = seed;
      std::cout << out.dump() << "\n";
      return verdict_exit(c.verdict);
    }
    if (*fmake) {
      NumberField K(parse_polyq(field_poly));
      FamilyKind kind = parse_family_kind(kind_text);
      FamilyMember m = family_member(kind, K.parse(v_text));
      TorsionCertificate c =
          certify_torsion(m.curve, family_structure(kind), {PointK::affine(K.zero(), K.zero())});
      Json out = {{"kind", kind_str(kind)}, {"v", elem_json(m.v)}, {"curve", curve_str(m.curve)},
                  {"certificate", certificate_value(c)}};
      if (m.t) out["t"] = elem_json(*m.t);
      std::cout << out.dump() << "\n";
      return verdict_exit(c.verdict);
    }
    if (*tverify) {
      VerifyOptions opt;
      opt.jobs = jobs;
      opt.data_dir = data_dir;
      if (*row_opt) opt.row = row;
      std::vector<int> ids;
      if (*table_opt)
        ids.push_back(table_id);
      else
        for (int i = 1; i <= kTableCount; ++i) ids.push_back(i);
      CheckStatus worst = CheckStatus::Pass;
      Json all = Json::array();
      for (int id : ids) {
        TableReport rep = verify_table(id, opt);
        worst = std::max(worst, rep.status());
        if (json_out) {
          all.push_back(report_json(rep));
          continue;
        }
        for (const auto& r : rep.rows) {
          std::cout << "table " << r.table << " row " << r.row << " [" << r.label << "]: " << status_str(r.status()) << "\n";
          for (const auto& c : r.checks)
            std::cout << "  " << c.name << ": " << status_str(c.status) << " - " << c.detail << "\n";
          if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
        }
      }
      if (json_out)
        std::cout << all.dump(1) << "\n";
      else
        std::cout << "overall: " << status_str(worst) << "\n";
      return status_exit(worst);
    }
    if (*scan) {
      ScanTarget t = parse_scan_target(target_text);
      ScanResult r = scan_fields(read_field_list(list_path), t, max);
      Json out = scan_json(r);
      out["target"] = target_str(t);
      std::cout << out.dump(1) << "\n";
      return kOk;
    }
    if (*exp) {
      if (what == "phi") {
        std::cout << phi_json().dump(1) << "\n";
      } else if (what == "genus") {
        std::cout << genus_json().dump(1) << "\n";
      } else {
        Json all = Json::array();
        for (int i = 1; i <= kTableCount; ++i) all.push_back(table_to_json(load_table(i, data_dir)));
        std::cout << all.dump(1) << "\n";
      }
      return kOk;
    }
  } catch (const NoMatchWithinMax& e) {
    std::cerr << "no match: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    if (input_error(e)) {
      std::cerr << "input error: " << e.what() << "\n";
      return kInput;
    }
    std::cerr << "unresolved: " << e.what() << "\n";
    return kUnresolved;
  }
  return kInput;
}
