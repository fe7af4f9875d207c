#include "ectors/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ectors/roots.hpp"

#ifndef ECTORS_DATA_DIR
#define ECTORS_DATA_DIR "data"
#endif

namespace ectors {

std::size_t Table::size() const { return growth.size() + curves.size() + roots.size() + discs.size(); }

namespace {

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw TableFormat(std::string("missing key '") + key + "'");
  return j.at(key);
}

TorsionStructure json_structure(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw TableFormat("expected a pair (m, mn), got " + j.dump());
  return {j[0].get<long>(), j[1].get<long>()};
}

Json structure_json(const TorsionStructure& s) { return Json::array({s.m, s.mn}); }

Coords json_coords(const Json& j) {
  if (!j.is_array() || j.empty()) throw TableFormat("expected a coordinate array, got " + j.dump());
  Coords c;
  for (const auto& x : j) c.push_back(json_rat(x));
  return c;
}

Json coords_json(const Coords& c) {
  Json a = Json::array();
  for (const auto& x : c) a.push_back(rat_json(x));
  return a;
}

Int json_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw TableFormat("expected an integer, got " + j.dump());
}

Json int_json(const Int& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

const char* const kCurveKeys[5] = {"a1", "a2", "a3", "a4", "a6"};

}  // namespace

Table table_from_json(const Json& j) {
  Table t;
  t.id = at(j, "table").get<int>();
  if (t.id < 1 || t.id > kTableCount) throw TableFormat("table id out of range");
  for (const auto& r : at(j, "rows")) {
    if (t.id == 1) {
      GrowthRow g;
      g.modular = at(r, "modular").get<std::string>();
      g.field_poly = json_poly(at(r, "field_poly"));
      g.label = at(r, "label").get<std::string>();
      const Json& gr = at(r, "growth");
      if (!gr.is_array() || gr.size() != 2) throw TableFormat("growth must be a pair of structures");
      g.from = json_structure(gr[0]);
      g.to = json_structure(gr[1]);
      g.count = at(r, "count").get<int>();
      g.count_infinite = at(r, "count_infinite").get<bool>();
      for (const auto& s : at(r, "curve_torsion")) g.curve_torsion.push_back(json_structure(s));
      t.growth.push_back(std::move(g));
    } else if (t.id <= 7) {
      CurveRow c;
      c.block = at(r, "block").get<int>();
      c.field_poly = json_poly(at(r, "field_poly"));
      c.modular = at(r, "modular").get<std::string>();
      const Json& p = at(r, "point");
      if (!p.is_array() || p.size() != 2) throw TableFormat("point must have two coordinates");
      c.point = {json_coords(p[0]), json_coords(p[1])};
      const Json& cv = at(r, "curve");
      for (int i = 0; i < 5; ++i) c.curve[static_cast<std::size_t>(i)] = json_coords(at(cv, kCurveKeys[i]));
      c.claim = json_structure(at(r, "claim"));
      c.rank_metadata = at(r, "rank_metadata").get<long>();
      t.curves.push_back(std::move(c));
    } else if (t.id == 8) {
      RootRow o;
      for (const auto& m : at(r, "modular")) o.modular.push_back(m.get<std::string>());
      o.root_of_unity = at(r, "root_of_unity").get<int>();
      o.disc = json_int(at(r, "disc"));
      o.field_poly = json_poly(at(r, "field_poly"));
      t.roots.push_back(std::move(o));
    } else {
      DiscRow d;
      d.modular = at(r, "modular").get<std::string>();
      d.torsion_q = json_structure(at(r, "torsion_q"));
      d.torsion_k = json_structure(at(r, "torsion_k"));
      d.disc = json_int(at(r, "disc"));
      d.field_poly = json_poly(at(r, "field_poly"));
      t.discs.push_back(std::move(d));
    }
  }
  if (t.id == 9 && j.contains("rank_metadata")) t.rank_note = j.at("rank_metadata").get<std::string>();
  return t;
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& g : t.growth)
    rows.push_back({{"modular", g.modular},
                    {"field_poly", poly_json(g.field_poly)},
                    {"label", g.label},
                    {"growth", Json::array({structure_json(g.from), structure_json(g.to)})},
                    {"count", g.count},
                    {"count_infinite", g.count_infinite},
                    {"curve_torsion", [&] {
                       Json a = Json::array();
                       for (const auto& s : g.curve_torsion) a.push_back(structure_json(s));
                       return a;
                     }()}});
  for (const auto& c : t.curves) {
    Json cv;
    for (int i = 0; i < 5; ++i) cv[kCurveKeys[i]] = coords_json(c.curve[static_cast<std::size_t>(i)]);
    rows.push_back({{"block", c.block},
                    {"field_poly", poly_json(c.field_poly)},
                    {"modular", c.modular},
                    {"point", Json::array({coords_json(c.point[0]), coords_json(c.point[1])})},
                    {"curve", cv},
                    {"claim", structure_json(c.claim)},
                    {"rank_metadata", c.rank_metadata}});
  }
  for (const auto& o : t.roots)
    rows.push_back({{"modular", o.modular},
                    {"root_of_unity", o.root_of_unity},
                    {"disc", int_json(o.disc)},
                    {"field_poly", poly_json(o.field_poly)}});
  for (const auto& d : t.discs)
    rows.push_back({{"modular", d.modular},
                    {"torsion_q", structure_json(d.torsion_q)},
                    {"torsion_k", structure_json(d.torsion_k)},
                    {"disc", int_json(d.disc)},
                    {"field_poly", poly_json(d.field_poly)}});
  Json j = {{"table", t.id}, {"rows", rows}};
  if (!t.rank_note.empty()) j["rank_metadata"] = t.rank_note;
  return j;
}

std::string table_text(const Table& t) { return table_to_json(t).dump(1) + "\n"; }

std::string default_data_dir() {
  if (const char* env = std::getenv("ECTORS_DATA_DIR")) return env;
  return ECTORS_DATA_DIR;
}

std::string table_path(int id, const std::string& dir) { return dir + "/table" + std::to_string(id) + ".json"; }

Table load_table(int id, const std::string& dir) {
  const std::string path = table_path(id, dir);
  std::ifstream in(path);
  if (!in) throw TableFormat("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw TableFormat(path + ": " + e.what());
  }
  Table t = table_from_json(j);
  if (t.id != id) throw TableFormat(path + " holds table " + std::to_string(t.id));
  return t;
}

NumberField row_field(const PolyQ& f) { return NumberField(f); }

NfElem coords_elem(const NumberField& K, const Coords& c) {
  if (c.size() > static_cast<std::size_t>(K.degree())) throw TableFormat("element has too many coordinates");
  Coords v = c;
  v.resize(static_cast<std::size_t>(K.degree()), Rat(0));
  return K.from_coords(std::move(v));
}

CurveK row_curve(const CurveRow& r) {
  NumberField K = row_field(r.field_poly);
  std::vector<NfElem> a;
  for (const auto& c : r.curve) a.push_back(coords_elem(K, c));
  return CurveK(a[0], a[1], a[2], a[3], a[4]);
}

PointK row_point(const CurveRow& r) {
  NumberField K = row_field(r.field_poly);
  return PointK::affine(coords_elem(K, r.point[0]), coords_elem(K, r.point[1]));
}

TorsionStructure parse_structure(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.size() > 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  const auto comma = t.find(',');
  try {
    if (comma != std::string::npos) {
      std::size_t used1 = 0, used2 = 0;
      long m = std::stol(t.substr(0, comma), &used1);
      long mn = std::stol(t.substr(comma + 1), &used2);
      if (used1 == comma && used2 == t.size() - comma - 1 && m >= 1 && mn >= 1 && mn % m == 0) return {m, mn};
    }
  } catch (const std::logic_error&) {
  }
  throw ParseError("bad torsion structure '" + text + "' (expected m,mn with m | mn)");
}

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Unresolved:
      return "unresolved";
    case CheckStatus::Fail:
      return "fail";
  }
  return "?";
}

CheckStatus RowReport::status() const {
  CheckStatus s = error.empty() ? CheckStatus::Pass : CheckStatus::Unresolved;
  for (const auto& c : checks) s = std::max(s, c.status);
  return s;
}

const Check* RowReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CheckStatus TableReport::status() const {
  CheckStatus s = CheckStatus::Pass;
  for (const auto& r : rows) s = std::max(s, r.status());
  return s;
}

namespace {

Check check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

Check verdict_check(std::string name, const TorsionCertificate& c) {
  CheckStatus s = CheckStatus::Pass;
  if (c.verdict == Verdict::Mismatch) s = CheckStatus::Fail;
  if (c.verdict == Verdict::UpperBoundOnly || c.verdict == Verdict::LowerBoundOnly) s = CheckStatus::Unresolved;
  std::string d = "claimed " + c.claimed.str() + ", realized " + c.realized.str() + ", bound " + c.upper.bound.str() +
                  ", verdict " + verdict_str(c.verdict);
  if (!c.note.empty()) d += " (" + c.note + ")";
  return {std::move(name), s, d};
}

Check structure_check(std::string name, const TorsionStructure& expect,
                      const std::pair<TorsionStructure, TorsionCertificate>& got) {
  std::string d = "expected " + expect.str() + ", computed " + got.first.str() + " (" +
                  verdict_str(got.second.verdict) + ")";
  if (got.first != expect) {
    // an unproven smaller group can still grow to the expected one
    bool open = got.second.verdict != Verdict::Proven && expect.embeds_in(got.second.upper.bound);
    return {std::move(name), open ? CheckStatus::Unresolved : CheckStatus::Fail, d};
  }
  return {std::move(name), got.second.verdict == Verdict::Proven ? CheckStatus::Pass : CheckStatus::Unresolved, d};
}

std::string poly_label(const PolyQ& f) { return to_string(f); }

const GrowthRow* growth_row(const Table& t1, const std::string& modular, const PolyQ& f) {
  for (const auto& g : t1.growth)
    if (g.modular == modular && g.field_poly == f) return &g;
  return nullptr;
}

/// Table holding the curves for a modular curve, or 0.
int curve_table_for(ModularKind k) {
  switch (k) {
    case ModularKind::X11:
      return 2;
    case ModularKind::X14:
      return 3;
    case ModularKind::X15:
      return 4;
    case ModularKind::X2_10:
      return 5;
    case ModularKind::X3_9:
      return 6;
    case ModularKind::X6_6:
      return 7;
    default:
      return 0;
  }
}

std::multiset<TorsionStructure> claims_of_block(const Table& t, const PolyQ& f) {
  std::multiset<TorsionStructure> s;
  for (const auto& c : t.curves)
    if (c.field_poly == f) s.insert(c.claim);
  return s;
}

std::string structures_str(const std::multiset<TorsionStructure>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x.str();
  return out.empty() ? "-" : out;
}

struct Context {
  const Table& table;
  const VerifyOptions& opt;
  std::string dir;
  std::optional<Table> table1;
  std::map<int, Table> curve_tables;
  std::map<int, std::vector<FieldEntry>> field_lists;
};

void verify_curve_row(const Context& cx, std::size_t i, RowReport& rep) {
  const CurveRow& r = cx.table.curves[i];
  const ModularKind kind = parse_modular_kind(r.modular);
  NumberField K = row_field(r.field_poly);
  rep.checks.push_back(check("field", K.degree() == r.field_poly.degree(), "irreducible of degree " + std::to_string(K.degree())));

  CurveK X = modular_model(kind).curve(K);
  PointK P = PointK::affine(coords_elem(K, r.point[0]), coords_elem(K, r.point[1]));
  const bool on = X.on_curve(P);
  rep.checks.push_back(check("point_on_model", on, point_str(P) + " on " + modular_model(kind).equation));
  const GrowthRow* g = cx.table1 ? growth_row(*cx.table1, r.modular, r.field_poly) : nullptr;
  if (!g) {
    rep.checks.push_back(check("point_torsion", false, "no growth row for this field"));
  } else if (on) {
    auto ord = X.order_of_point(P, g->to.mn);
    bool ok = ord && g->to.mn % *ord == 0;
    rep.checks.push_back(check("point_torsion", ok,
                               ord ? "order " + std::to_string(*ord) + " in " + g->to.str()
                                   : "no order dividing " + std::to_string(g->to.mn)));
  }

  CurveK E(coords_elem(K, r.curve[0]), coords_elem(K, r.curve[1]), coords_elem(K, r.curve[2]),
           coords_elem(K, r.curve[3]), coords_elem(K, r.curve[4]));
  PointK h = PointK::affine(K.zero(), K.zero());
  const bool hint_on = E.on_curve(h);
  rep.checks.push_back(check("hint_on_curve", hint_on, "(0,0)"));
  std::vector<PointK> hints;
  if (hint_on) hints.push_back(h);
  rep.checks.push_back(verdict_check("certify", certify_torsion(E, r.claim, hints, cx.opt.certify)));

  // distinct from the earlier curves of its block
  std::vector<std::size_t> iso;
  std::size_t first = i;
  for (std::size_t j = 0; j < cx.table.curves.size(); ++j) {
    const CurveRow& o = cx.table.curves[j];
    if (o.block != r.block) continue;
    first = std::min(first, j);
    if (j < i && is_isomorphic(row_curve(o), E)) iso.push_back(j);
  }
  std::string d = "block " + std::to_string(r.block);
  for (auto j : iso) d += ", isomorphic to row " + std::to_string(j);
  rep.checks.push_back(check("non_isomorphic", iso.empty(), d));

  if (first == i && g) {
    auto claims = claims_of_block(cx.table, r.field_poly);
    std::multiset<TorsionStructure> listed(g->curve_torsion.begin(), g->curve_torsion.end());
    bool ok = static_cast<int>(claims.size()) == g->count && claims == listed;
    rep.checks.push_back(check("block_count", ok,
                               std::to_string(claims.size()) + " curves " + structures_str(claims) + "; growth table lists " +
                                   std::to_string(g->count) + (g->count_infinite ? " (infinite family)" : "") + " " +
                                   structures_str(listed)));
  }
}

void verify_growth_row(const Context& cx, std::size_t i, RowReport& rep) {
  const GrowthRow& g = cx.table.growth[i];
  const ModularKind kind = parse_modular_kind(g.modular);
  NumberField K = row_field(g.field_poly);
  GrowthReport gr = growth_check(kind, K, cx.opt.certify);
  rep.checks.push_back(structure_check("torsion_over_q", g.from, {gr.over_q, gr.cert_q}));
  rep.checks.push_back(structure_check("torsion_over_k", g.to, {gr.over_k, gr.cert_k}));

  const int tid = curve_table_for(kind);
  std::multiset<TorsionStructure> claims;
  if (tid) claims = claims_of_block(cx.curve_tables.at(tid), g.field_poly);
  std::multiset<TorsionStructure> listed(g.curve_torsion.begin(), g.curve_torsion.end());
  bool ok = static_cast<int>(claims.size()) == g.count && claims == listed;
  std::string where = tid ? "table " + std::to_string(tid) : std::string("no curve table");
  rep.checks.push_back(check("curve_count", ok,
                             where + " has " + std::to_string(claims.size()) + " curves " + structures_str(claims) +
                                 "; listed " + std::to_string(g.count) + " " + structures_str(listed)));
}

void verify_disc(const Int& expect, const NumberField& K, RowReport& rep) {
  Int d = field_discriminant(K);
  std::string detail = "expected " + expect.get_str() + ", computed " + d.get_str();
  if (d != expect && K.poly_discriminant() == expect) detail += "; the listed value is disc(f), index " + Int(sqrt(Int(expect / d))).get_str();
  if (d != expect && K.poly_discriminant() != expect) detail += "; disc(f) = " + K.poly_discriminant().get_str();
  rep.checks.push_back(check("discriminant", d == expect, detail));
}

void verify_root_row(const Context& cx, std::size_t i, RowReport& rep) {
  const RootRow& r = cx.table.roots[i];
  NumberField K = row_field(r.field_poly);
  verify_disc(r.disc, K, rep);
  const PolyQ phi = cyclotomic_poly(r.root_of_unity);
  rep.checks.push_back(check("root_of_unity", contains_root(K, phi), "Phi_" + std::to_string(r.root_of_unity)));
  const auto& list = cx.field_lists.at(K.degree());
  std::string smaller;
  bool listed = false;
  for (const auto& e : list) {
    if (abs(e.disc) < abs(r.disc)) {
      if (contains_root(NumberField(e.poly), phi)) smaller += (smaller.empty() ? "" : ", ") + e.disc.get_str();
    } else if (e.disc == r.disc && e.poly == r.field_poly) {
      listed = true;
    }
  }
  rep.checks.push_back(check("minimal", smaller.empty() && listed,
                             smaller.empty() ? (listed ? "no smaller field in the list has the root"
                                                       : "field missing from the degree list")
                                             : "smaller fields with the root: " + smaller));
}

void verify_disc_row(const Context& cx, std::size_t i, RowReport& rep) {
  const DiscRow& r = cx.table.discs[i];
  NumberField K = row_field(r.field_poly);
  verify_disc(r.disc, K, rep);
  const ModularModel M = modular_model(parse_modular_kind(r.modular));
  rep.checks.push_back(structure_check("torsion_over_q", r.torsion_q,
                                       torsion_structure(M.curve(NumberField::rationals()), cx.opt.certify)));
  rep.checks.push_back(structure_check("torsion_over_k", r.torsion_k, torsion_structure(M.curve(K), cx.opt.certify)));
}

std::string row_label(const Table& t, std::size_t i) {
  if (t.id == 1) return t.growth[i].modular + " " + poly_label(t.growth[i].field_poly);
  if (t.id <= 7) return t.curves[i].modular + " " + poly_label(t.curves[i].field_poly);
  if (t.id == 8) return "Phi_" + std::to_string(t.roots[i].root_of_unity) + " " + poly_label(t.roots[i].field_poly);
  return t.discs[i].modular + " " + poly_label(t.discs[i].field_poly);
}

}  // namespace

TableReport verify_table(int id, const VerifyOptions& opt) {
  const std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
  const Table t = load_table(id, dir);
  Context cx{t, opt, dir, std::nullopt, {}, {}};
  if (id >= 2 && id <= 7) cx.table1 = load_table(1, dir);
  if (id == 1)
    for (int k = 2; k <= 7; ++k) cx.curve_tables.emplace(k, load_table(k, dir));
  if (id == 8)
    for (const auto& r : t.roots) {
      int d = r.field_poly.degree();
      if (!cx.field_lists.count(d)) cx.field_lists.emplace(d, read_field_list(field_list_path(dir, d)));
    }

  std::vector<std::size_t> todo;
  if (opt.row) {
    if (*opt.row >= t.size()) throw TableFormat("table " + std::to_string(id) + " has no row " + std::to_string(*opt.row));
    todo.push_back(*opt.row);
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) todo.push_back(i);
  }

  std::vector<RowReport> out(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < todo.size();) {
      const std::size_t i = todo[k];
      RowReport& rep = out[k];
      rep.table = id;
      rep.row = i;
      rep.label = row_label(t, i);
      try {
        if (id == 1)
          verify_growth_row(cx, i, rep);
        else if (id <= 7)
          verify_curve_row(cx, i, rep);
        else if (id == 8)
          verify_root_row(cx, i, rep);
        else
          verify_disc_row(cx, i, rep);
      } catch (const std::exception& e) {
        rep.error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return {std::move(out)};
}

Json report_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json checks = Json::array();
    for (const auto& c : row.checks)
      checks.push_back({{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
    Json j = {{"table", row.table}, {"row", row.row}, {"label", row.label}, {"status", status_str(row.status())},
              {"checks", checks}};
    if (!row.error.empty()) j["error"] = row.error;
    rows.push_back(j);
  }
  return {{"status", status_str(r.status())}, {"rows", rows}};
}

std::string field_list_path(const std::string& dir, int degree) {
  return dir + "/fields/degree" + std::to_string(degree) + ".csv";
}

std::vector<FieldEntry> read_field_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field list " + path);
  std::vector<FieldEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    auto bad = [&](const std::string& why) { return ParseError(path + ":" + std::to_string(lineno) + ": " + why); };
    if (cells.size() < 3) throw bad("too few columns");
    FieldEntry e;
    try {
      e.degree = std::stoi(cells[0]);
      e.disc = Int(cells[1]);
      std::vector<Rat> c;
      for (std::size_t i = 2; i < cells.size(); ++i) c.push_back(Rat(Int(cells[i])));
      e.poly = PolyQ(std::move(c));
    } catch (const std::invalid_argument&) {
      throw bad("not an integer");
    }
    if (e.poly.degree() != e.degree || e.poly.lead() != 1) throw bad("polynomial is not monic of the stated degree");
    out.push_back(std::move(e));
  }
  return out;
}

ScanTarget parse_scan_target(const std::string& text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    int depth = 0;
    for (char ch : text) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ':' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  ScanTarget t;
  try {
    if (parts[0] == "root" && parts.size() == 2) {
      t.kind = ScanTarget::Kind::Root;
      t.root_of_unity = std::stoi(parts[1]);
      if (t.root_of_unity < 1) throw ParseError("root of unity order must be positive");
      return t;
    }
    if (parts[0] == "growth" && parts.size() == 3) {
      t.kind = ScanTarget::Kind::Growth;
      t.modular = parse_modular_kind(parts[1]);
      t.structure = parse_structure(parts[2]);
      return t;
    }
    if (parts[0] == "point" && parts.size() >= 2) {
      t.kind = ScanTarget::Kind::Point;
      t.modular = parse_modular_kind(parts[1]);
      t.height = 2;
      for (std::size_t i = 2; i < parts.size(); ++i) {
        if (parts[i].rfind("h=", 0) == 0)
          t.height = std::stol(parts[i].substr(2));
        else
          t.structure = parse_structure(parts[i]);
      }
      if (t.height < 0 || t.height > 6) throw ParseError("height must lie in 0..6");
      return t;
    }
  } catch (const std::logic_error&) {
  }
  throw ParseError("unknown scan target '" + text + "'");
}

std::string target_str(const ScanTarget& t) {
  switch (t.kind) {
    case ScanTarget::Kind::Root:
      return "root:" + std::to_string(t.root_of_unity);
    case ScanTarget::Kind::Growth:
      return "growth:" + kind_str(*t.modular) + ":" + t.structure->str();
    case ScanTarget::Kind::Point: {
      std::string s = "point:" + kind_str(*t.modular);
      if (t.structure) s += ":" + t.structure->str();
      return s + ":h=" + std::to_string(t.height);
    }
  }
  return "?";
}

namespace {

/// Empty when K meets the target, otherwise the reason it does not.
struct SplitRoot {
  std::uint64_t p;
  std::vector<std::uint64_t> powers;  // r^i mod p
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

/// Degree-one primes of K used to discard non-squares cheaply.
std::vector<SplitRoot> sieve_roots(const NumberField& K, std::size_t want) {
  std::vector<SplitRoot> out;
  for (std::uint64_t p = 101; out.size() < want && p < 100000; p += 2) {
    if (!is_prime(Int(static_cast<unsigned long>(p)))) continue;
    PrimeSplitting s = split_prime(K, p);
    if (!s.usable) continue;
    for (const auto& f : s.factors) {
      if (f.residue_degree != 1 || f.exponent != 1) continue;
      const std::uint64_t r = (p - f.g[0] % p) % p;
      SplitRoot sr{p, {}};
      std::uint64_t x = 1;
      for (int i = 0; i < K.degree(); ++i, x = mulmod(x, r, p)) sr.powers.push_back(x);
      out.push_back(std::move(sr));
      break;
    }
  }
  return out;
}

std::uint64_t reduce_long(long v, std::uint64_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
}

/// Non-cuspidal evidence: more torsion points than cusps over K, or a point of
/// infinite order with integral power-basis x-coordinates bounded by the height.
std::pair<bool, std::string> point_evidence(const ModularModel& m, const NumberField& K, const ScanTarget& t,
                                            const CertifyOptions& opt) {
  if (m.required_root_of_unity > 1 && !contains_root(K, cyclotomic_poly(m.required_root_of_unity)))
    return {false, "no root of Phi_" + std::to_string(m.required_root_of_unity)};
  const CurveK E = m.curve(K);
  auto [tors, cert] = torsion_structure(E, opt);
  std::string tail = "; torsion " + tors.str() + " (" + verdict_str(cert.verdict) + ")";
  if (t.structure && (tors != *t.structure || cert.verdict != Verdict::Proven))
    return {false, "torsion " + tors.str() + " (" + verdict_str(cert.verdict) + ")"};

  const long points = cert.realized.order();
  const int cusps = rational_cusp_count(m, K);
  if (points > cusps)
    return {true, std::to_string(points) + " torsion points but only " + std::to_string(cusps) + " cusps over K" + tail};

  const long bound = cert.upper.order_bound;
  const auto& a = m.coeffs;
  const int n = K.degree();
  const std::vector<SplitRoot> sieve = sieve_roots(K, 12);
  std::vector<long> c(n, -t.height);
  for (;;) {
    bool maybe = true;
    for (const auto& sr : sieve) {
      const std::uint64_t p = sr.p;
      std::uint64_t x = 0;
      for (int i = 0; i < n; ++i) x = (x + mulmod(reduce_long(c[i], p), sr.powers[i], p)) % p;
      const std::uint64_t u = (mulmod(reduce_long(a[0], p), x, p) + reduce_long(a[2], p)) % p;
      std::uint64_t cub = (mulmod(mulmod(x, x, p), x, p) + mulmod(reduce_long(a[1], p), mulmod(x, x, p), p) +
                           mulmod(reduce_long(a[3], p), x, p) + reduce_long(a[4], p)) % p;
      const std::uint64_t d = (mulmod(u, u, p) + mulmod(4, cub, p)) % p;
      if (d != 0 && powmod(d, (p - 1) / 2, p) != 1) {
        maybe = false;
        break;
      }
    }
    if (maybe) {
      std::vector<Rat> coords(c.begin(), c.end());
      const NfElem x = K.from_coords(coords);
      const NfElem u = K.from_int(a[0]) * x + K.from_int(a[2]);
      const NfElem d = u * u + K.from_int(4) * (x * x * x + K.from_int(a[1]) * x * x + K.from_int(a[3]) * x +
                                                K.from_int(a[4]));
      const auto roots = sqrt_in_field(d);
      if (!roots.empty()) {
        const PointK P = PointK::affine(x, (roots[0] - u) / K.from_int(2));
        if (!E.mul(bound, P).infinity) return {true, "point " + point_str(P) + " of infinite order" + tail};
      }
    }
    int i = 0;
    while (i < n && c[i] == t.height) c[i++] = -t.height;
    if (i == n) break;
    ++c[i];
  }
  return {false, "no non-cuspidal point found up to height " + std::to_string(t.height) + tail};
}

std::pair<bool, std::string> scan_one(const FieldEntry& e, const ScanTarget& t, const CertifyOptions& opt) {
  NumberField K(e.poly);
  switch (t.kind) {
    case ScanTarget::Kind::Root: {
      bool ok = contains_root(K, cyclotomic_poly(t.root_of_unity));
      return {ok, ok ? "contains a root of Phi_" + std::to_string(t.root_of_unity)
                     : "no root of Phi_" + std::to_string(t.root_of_unity)};
    }
    case ScanTarget::Kind::Growth: {
      auto [s, cert] = torsion_structure(modular_model(*t.modular).curve(K), opt);
      bool ok = s == *t.structure && cert.verdict == Verdict::Proven;
      return {ok, "torsion " + s.str() + " (" + verdict_str(cert.verdict) + ")"};
    }
    case ScanTarget::Kind::Point:
      return point_evidence(modular_model(*t.modular), K, t, opt);
  }
  throw InternalError("unknown scan target kind");
}

}  // namespace

ScanResult scan_fields(const std::vector<FieldEntry>& list, const ScanTarget& target, std::size_t max,
                       const CertifyOptions& opt) {
  for (std::size_t i = 1; i < list.size(); ++i)
    if (abs(list[i].disc) < abs(list[i - 1].disc))
      throw ListNotSorted("entry " + std::to_string(i) + " has |disc| " + Int(abs(list[i].disc)).get_str() +
                          " after " + Int(abs(list[i - 1].disc)).get_str());
  ScanResult out;
  for (std::size_t i = 0; i < list.size() && i < max; ++i) {
    auto [ok, why] = scan_one(list[i], target, opt);
    if (ok) {
      out.match = list[i];
      out.evidence = why;
      return out;
    }
    out.rejected.push_back({list[i], why});
  }
  throw NoMatchWithinMax("no field among the first " + std::to_string(std::min(max, list.size())) + " meets " +
                         target_str(target));
}

Json scan_json(const ScanResult& r) {
  auto entry = [](const FieldEntry& e) {
    return Json{{"degree", e.degree}, {"disc", int_json(e.disc)}, {"poly", poly_json(e.poly)}};
  };
  Json rej = Json::array();
  for (const auto& x : r.rejected) rej.push_back({{"field", entry(x.field)}, {"reason", x.reason}});
  return {{"match", entry(r.match)}, {"evidence", r.evidence}, {"rejected", rej}};
}

}  // namespace ectors
