#pragma once

// The opplab command line. run() returns the exit code: 0 success, 1 a
// checked property failed, 2 invalid input.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opplab/json_io.hpp"
#include "opplab/opplab.hpp"

namespace opplab::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kPropertyFailed = 1, kInvalidInput = 2 };

struct OperationRoute {
  std::string operation;
  std::string subcommand;
};

inline const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {"opp-intervals", "opp-flags",      "census",
                                                 "bip",           "flag-class",     "sample-cell",
                                                 "torus-check",   "framed-census",  "grasstope-check",
                                                 "verify-paper"};
  return names;
}

/// Which subcommand reports the result of each library operation.
inline const std::vector<OperationRoute>& operation_table() {
  static const std::vector<OperationRoute> table = {
      {"length", "sample-cell"},
      {"bruhat_leq", "opp-intervals"},
      {"interval_elements", "sample-cell"},
      {"intervals_intersect", "opp-intervals"},
      {"interval_contains", "opp-intervals"},
      {"interval_perp", "sample-cell"},
      {"demazure_product", "sample-cell"},
      {"longest_element", "opp-flags"},
      {"star_involution", "opp-flags"},
      {"reduced_word", "sample-cell"},
      {"minor", "opp-flags"},
      {"rank", "grasstope-check"},
      {"plucker_vector", "flag-class"},
      {"orthogonal_complement", "grasstope-check"},
      {"signed_perm_matrix", "sample-cell"},
      {"gaussian_membership", "opp-flags"},
      {"positivity_class", "flag-class"},
      {"transverse", "grasstope-check"},
      {"transverse_by_plucker", "grasstope-check"},
      {"positroid_of", "flag-class"},
      {"subspace_sign_class", "flag-class"},
      {"positroid_projection", "opp-intervals"},
      {"flag_perp", "flag-class"},
      {"flag_sign_class", "flag-class"},
      {"relative_position", "opp-flags"},
      {"cell_of", "flag-class"},
      {"mr_sample", "sample-cell"},
      {"tnp_sample", "sample-cell"},
      {"opposed_flags", "opp-flags"},
      {"opposed_intervals", "opp-intervals"},
      {"opposed_intervals_numeric", "opp-intervals"},
      {"partial_flags_opposed", "opp-flags"},
      {"double_coset_min", "opp-flags"},
      {"excess", "opp-flags"},
      {"opposed_via_maximal_parabolics", "opp-flags"},
      {"flagtope_well_defined", "opp-intervals"},
      {"census_opposed", "census"},
      {"grasstope_well_defined", "grasstope-check"},
      {"bip_vertices", "bip"},
      {"hulls_intersect", "bip"},
      {"check_bip_theorem", "bip"},
      {"torus_positive", "torus-check"},
      {"torus_nonnegative", "torus-check"},
      {"eigen_verify", "torus-check"},
      {"lusztig_scan", "torus-check"},
      {"framed_cell_census", "framed-census"},
      {"counterexample_suite", "verify-paper"},
  };
  return table;
}

namespace detail {

/// Inline JSON, or @path to read it from a file.
inline json read_json_arg(const std::string& text, const std::string& field) {
  std::string source = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError(field + ": cannot read " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  try {
    return json::parse(source);
  } catch (const json::parse_error&) {
    throw InputError(field + ": malformed JSON");
  }
}

inline ExactMatrix matrix_arg(const std::string& text, const std::string& field) {
  return io::matrix_from_json(read_json_arg(text, field), field);
}

inline std::vector<Rational> rationals_arg(const std::string& text, const std::string& field) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    try {
      out.push_back(parse_rational(text.substr(start, end - start)));
    } catch (const InputError& e) {
      throw InputError(field + ": " + e.what());
    }
    start = end + 1;
  }
  return out;
}

inline std::vector<int> ints_arg(const std::string& text, const std::string& field) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& q : rationals_arg(text, field)) {
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw InputError(field + ": expected integers");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

inline void check_n(int n, const BruhatInterval& interval, const std::string& field) {
  if (n != 0 && interval.n() != n) throw InputError(field + ": interval lives in S_" + std::to_string(interval.n()) + ", not S_" + std::to_string(n));
}

inline std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

/// Table: an optional verdict line, then one "key: value" line per field.
inline void emit(std::ostream& out, const std::string& format, const json& body, const json* verdict = nullptr) {
  if (format == "json") {
    out << body.dump() << '\n';
    return;
  }
  if (verdict) out << scalar_text(*verdict) << '\n';
  for (const auto& [key, value] : body.items()) out << key << ": " << scalar_text(value) << '\n';
}

}  // namespace detail

struct Options {
  int n = 0;
  std::string interval_i;
  std::string interval_j;
  int trials = 3;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  std::string format = "table";
  std::string flag_f;
  std::string flag_g;
  std::string dims_f;
  std::string dims_g;
  std::string side = "TNN";
  std::string params;
  std::string basis;
  std::string h;
  std::string eigenvalues;
  std::string g1;
  std::string g2;
  std::string ratios;
  std::string subspace_w;
  int k = 1;
};

inline int cmd_opp_intervals(const Options& o, std::ostream& out) {
  const auto a = io::parse_interval(o.interval_i, "--I");
  const auto b = io::parse_interval(o.interval_j, "--J");
  detail::check_n(o.n, a, "--I");
  detail::check_n(o.n, b, "--J");
  require_same_n(a, b);
  const bool opposed = opposed_intervals(a, b);
  json body;
  body["I"] = io::to_json(a);
  body["J"] = io::to_json(b);
  body["opposed"] = opposed;
  body["intersect"] = intervals_intersect(a, b);
  body["J_within_I"] = interval_contains(a, b);
  body["v_le_vprime"] = bruhat_leq(a.v(), b.v());
  body["wprime_le_w"] = bruhat_leq(b.w(), a.w());
  body["flagtope_well_defined"] = flagtope_well_defined(a, b);
  json projections = json::array();
  for (int k = 1; k < a.n(); ++k) {
    const auto pa = positroid_projection(a, k);
    const auto pb = positroid_projection(b, k);
    projections.push_back({{"k", k}, {"I", io::to_json(pa)["members"]}, {"J", io::to_json(pb)["members"]}, {"meet", pa.intersects(pb)}});
  }
  body["projections"] = projections;
  int code = kOk;
  if (o.trials > 0) {
    const bool numeric = opposed_intervals_numeric(a, b, o.trials, o.seed);
    body["opposed_numeric"] = numeric;
    body["trials"] = o.trials;
    if (numeric != opposed) code = kPropertyFailed;
  }
  const json verdict = opposed;
  detail::emit(out, o.format, body, &verdict);
  return code;
}

inline int cmd_opp_flags(const Options& o, std::ostream& out) {
  const ExactMatrix rep_f = detail::matrix_arg(o.flag_f, "--F");
  const ExactMatrix rep_g = detail::matrix_arg(o.flag_g, "--G");
  if (rep_f.rows() != rep_g.rows()) throw InputError("--G: flags of different n");
  if (o.n != 0 && rep_f.rows() != o.n) throw InputError("--F: matrix does not have " + std::to_string(o.n) + " rows");
  const int n = rep_f.rows();
  json body;
  json verdict;
  int code = kOk;
  if (o.dims_f.empty() && o.dims_g.empty()) {
    const Flag f(rep_f);
    const Flag g(rep_g);
    const bool opposed = opposed_flags(f, g);
    const bool by_parabolics = opposed_via_maximal_parabolics(f, g);
    const ExactMatrix test = signed_perm_matrix(longest_element(n)) * inverse(g.rep()) * f.rep();
    json minors = json::array();
    IndexSet lead;
    for (int k = 1; k <= n; ++k) {
      lead.push_back(k);
      minors.push_back(io::to_json(minor(test, lead, lead)));
    }
    const Permutation u = relative_position(f, g);
    body["opposed"] = opposed;
    body["opposed_via_maximal_parabolics"] = by_parabolics;
    body["gaussian_membership"] = gaussian_membership(test);
    body["leading_minors"] = minors;
    body["relative_position"] = io::to_json(u);
    body["relative_position_is_w0"] = u == longest_element(n);
    verdict = opposed;
    if (by_parabolics != opposed) code = kPropertyFailed;
  } else {
    const PartialFlag p(detail::ints_arg(o.dims_f, "--F-dims"), rep_f);
    const PartialFlag q(detail::ints_arg(o.dims_g, "--G-dims"), rep_g);
    const auto j = p.type();
    const auto j2 = q.type();
    const bool opposed = partial_flags_opposed(p, q);
    const Permutation u = relative_position(p.completion(), q.completion());
    json star = json::array();
    for (int i : j.simple()) star.push_back(star_involution(i, n));
    body["opposed"] = opposed;
    body["type_F"] = j.simple();
    body["type_G"] = j2.simple();
    body["type_F_star"] = star;
    body["relative_position"] = io::to_json(double_coset_min(u, j, j2));
    body["opposite_position"] = io::to_json(double_coset_min(longest_element(n), j, j2));
    body["excess"] = excess(j, j2);
    verdict = opposed;
  }
  detail::emit(out, o.format, body, &verdict);
  return code;
}

inline int cmd_census(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 5) throw InputError("--n: census needs 1 <= n <= 5");
  const auto report = census_opposed(o.n, thread_count());
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw InputError("--out: cannot write " + o.out_path);
    for (const auto& e : report.entries) file << io::to_json(e).dump() << '\n';
  }
  json disjoint = json::array();
  for (const auto& e : report.entries)
    if (e.opposed && !e.intersect) disjoint.push_back({io::to_json(e.first), io::to_json(e.second)});
  json body;
  body["n"] = o.n;
  body["pairs"] = report.entries.size();
  body["opposed"] = report.opposed;
  body["intersect"] = report.intersect;
  body["bip_intersect"] = report.bip_intersect;
  body["opposed_disjoint"] = report.opposed_disjoint;
  body["bip_violations"] = report.bip_violations;
  if (disjoint.size() <= 20) body["opposed_disjoint_pairs"] = disjoint;
  detail::emit(out, o.format, body);
  return report.bip_violations == 0 ? kOk : kPropertyFailed;
}

inline int cmd_bip(const Options& o, std::ostream& out) {
  const auto a = io::parse_interval(o.interval_i, "--I");
  const auto b = io::parse_interval(o.interval_j, "--J");
  detail::check_n(o.n, a, "--I");
  detail::check_n(o.n, b, "--J");
  require_same_n(a, b);
  const auto pa = bip_vertices(a);
  const auto pb = bip_vertices(b);
  const auto witness = hull_intersection(pa, pb);
  const bool theorem_holds = check_bip_theorem(a, b);
  json body;
  body["I_vertices"] = io::to_json(pa);
  body["J_vertices"] = io::to_json(pb);
  body["hulls_intersect"] = witness.has_value();
  body["witness"] = witness ? io::to_json(*witness) : json(nullptr);
  body["theorem_holds"] = theorem_holds;
  const json verdict = witness.has_value();
  detail::emit(out, o.format, body, &verdict);
  return theorem_holds ? kOk : kPropertyFailed;
}

inline int cmd_flag_class(const Options& o, std::ostream& out) {
  const Flag f(detail::matrix_arg(o.flag_f, "--F"));
  if (o.n != 0 && f.n() != o.n) throw InputError("--F: matrix is not " + std::to_string(o.n) + "x" + std::to_string(o.n));
  const auto cls = flag_sign_class(f);
  const auto profile = flag_sign_profile(f);
  json steps = json::array();
  for (int k = 1; k < f.n(); ++k) {
    const auto step = f.step(k);
    json s{{"k", k}, {"pluckers", io::to_json(plucker_vector(step.basis()))}, {"class", to_string(subspace_sign_class(step))}};
    if (sign_profile(step).nonnegative) s["positroid"] = io::to_json(positroid_of(step))["members"];
    steps.push_back(std::move(s));
  }
  json body;
  body["class"] = to_string(cls);
  body["matrix_class"] = to_string(positivity_class(f.rep()));
  body["steps"] = steps;
  body["perp"] = io::to_json(flag_perp(f).rep());
  body["perp_class"] = to_string(flag_sign_class(flag_perp(f)));
  if (profile.nonnegative) body["cell_TNN"] = io::to_json(cell_of(f, CellSide::TNN).interval);
  if (profile.nonpositive) body["cell_TNP"] = io::to_json(cell_of(f, CellSide::TNP).interval);
  const json verdict = to_string(cls);
  detail::emit(out, o.format, body, &verdict);
  return kOk;
}

inline int cmd_sample_cell(const Options& o, std::ostream& out) {
  const auto interval = io::parse_interval(o.interval_i, "--I");
  detail::check_n(o.n, interval, "--I");
  CellSide side;
  if (o.side == "TNN") side = CellSide::TNN;
  else if (o.side == "TNP") side = CellSide::TNP;
  else throw InputError("--side: expected TNN or TNP");
  std::vector<Rational> params = detail::rationals_arg(o.params, "--params");
  if (o.params.empty()) params = sample_parameters(interval.dimension(), o.seed_given ? 1 : 0, o.seed);
  const Flag f = side == CellSide::TNN ? mr_sample(interval, params) : tnp_sample(interval, params);
  const auto word = reduced_word(interval.w());
  Permutation folded = Permutation::identity(interval.n());
  for (int i : word) folded = demazure_product(folded, Permutation::simple(i, interval.n()));
  const auto label = cell_of(f, side);
  json elements = json::array();
  for (const auto& x : interval_elements(interval)) elements.push_back(io::to_json(x));
  json p = json::array();
  for (const auto& t : params) p.push_back(io::to_json(t));
  json body;
  body["interval"] = io::to_json(interval);
  body["side"] = to_string(side);
  body["params"] = p;
  body["length_v"] = length(interval.v());
  body["length_w"] = length(interval.w());
  body["reduced_word_w"] = word;
  body["word_demazure_product"] = io::to_json(folded);
  body["w_dot"] = io::to_json(signed_perm_matrix(interval.w()));
  body["elements"] = elements;
  body["perp"] = io::to_json(interval_perp(interval));
  body["flag"] = io::to_json(f, label);
  body["class"] = to_string(flag_sign_class(f));
  const bool round_trip = label.interval == interval;
  body["round_trip"] = round_trip;
  const json verdict = io::to_json(f.rep()).dump();
  detail::emit(out, o.format, body, &verdict);
  return round_trip && folded == interval.w() ? kOk : kPropertyFailed;
}

inline int cmd_torus_check(const Options& o, std::ostream& out) {
  json body;
  int code = kOk;
  if (!o.basis.empty()) {
    const TorusBasis b(detail::matrix_arg(o.basis, "--basis"));
    const auto positive = find_torus_ordering(b, true);
    const auto nonnegative = find_torus_ordering(b, false);
    body["positive"] = positive.has_value();
    body["nonnegative"] = nonnegative.has_value();
    if (positive) body["positive_ordering"] = *positive;
    if (positive && !nonnegative) code = kPropertyFailed;
    if (!o.h.empty()) {
      const ExactMatrix h = detail::matrix_arg(o.h, "--h");
      const auto eigenvalues = detail::rationals_arg(o.eigenvalues, "--eigenvalues");
      body["eigen_verified"] = eigen_verify(h, eigenvalues, b);
      body["h_class"] = to_string(positivity_class(h));
    }
  }
  if (!o.g1.empty() || !o.g2.empty()) {
    const auto report = lusztig_scan(detail::matrix_arg(o.g1, "--g1"), detail::matrix_arg(o.g2, "--g2"),
                                     detail::rationals_arg(o.ratios, "--ratios"));
    json probes = json::array();
    for (const auto& p : report.probes) probes.push_back({{"ratio", io::to_json(p.ratio)}, {"class", to_string(p.positivity)}});
    body["scan"] = probes;
    body["scan_first_positive"] = report.first_positive ? io::to_json(*report.first_positive) : json(nullptr);
    body["scan_monotone"] = report.monotone;
    if (!report.monotone) code = kPropertyFailed;
  }
  if (body.empty()) throw InputError("--basis: torus-check needs --basis and/or --g1/--g2");
  detail::emit(out, o.format, body);
  return code;
}

inline int cmd_framed_census(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 4) throw InputError("--n: framed-census needs 1 <= n <= 4");
  const auto report = framed_cell_census(o.n);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw InputError("--out: cannot write " + o.out_path);
    for (const auto& c : report.cells)
      file << json{{"I", io::to_json(c.first)}, {"J", io::to_json(c.second)}, {"dim", c.dim}}.dump() << '\n';
  }
  json f_vector = json::array();
  for (const auto& [dim, count] : report.f_vector) f_vector.push_back(count);
  json top = json::array();
  for (const auto& c : report.top_cells) top.push_back({io::to_json(c.first), io::to_json(c.second)});
  json body;
  body["n"] = o.n;
  body["cells"] = report.cells.size();
  body["f_vector"] = f_vector;
  body["euler_characteristic"] = report.euler_characteristic;
  body["top_cells"] = top;
  detail::emit(out, o.format, body);
  return report.top_cells.size() == 1 ? kOk : kPropertyFailed;
}

inline int cmd_grasstope_check(const Options& o, std::ostream& out) {
  const auto interval = io::parse_interval(o.interval_i, "--I");
  detail::check_n(o.n, interval, "--I");
  const ExactMatrix w_basis = detail::matrix_arg(o.subspace_w, "--W");
  if (w_basis.rows() != interval.n()) throw InputError("--W: basis has " + std::to_string(w_basis.rows()) + " rows, expected " + std::to_string(interval.n()));
  if (rank(w_basis) != w_basis.cols()) throw InputError("--W: basis columns are dependent");
  const Subspace w(w_basis);
  if (o.k < 1 || o.k > interval.n() - 1) throw InputError("--k: must lie in [1, n-1]");
  if (w.k() < o.k) throw InputError("--k: dim W must be at least k");
  if (o.trials < 1) throw InputError("--trials: must be >= 1");
  const bool ok = grasstope_well_defined(w, interval, o.k, o.trials, o.seed);
  const Flag sample = mr_sample(interval, sample_parameters(interval.dimension(), 0, o.seed));
  const ExactMatrix v = orthogonal_complement(sample.step(o.k).basis());
  const Subspace vs(v);
  json body;
  body["well_defined"] = ok;
  body["dim_W"] = rank(w_basis);
  body["m"] = w.k() - o.k;
  body["sample_V"] = io::to_json(v);
  body["sample_transverse"] = transverse(w, vs);
  body["sample_transverse_by_plucker"] = w.k() == o.k ? json(transverse_by_plucker(w, sample.step(o.k))) : json(nullptr);
  const json verdict = ok;
  detail::emit(out, o.format, body, &verdict);
  return kOk;
}

struct ReferenceCheck {
  std::string name;
  std::function<bool()> check;
};

inline BruhatInterval iv(const char* v, const char* w) { return BruhatInterval(parse_permutation(v), parse_permutation(w)); }

inline ExactMatrix torus_example_basis() {
  return {{1, Rational(-1, 2), Rational(2, 5)}, {1, 0, Rational(-1, 5)}, {1, 1, Rational(3, 5)}};
}

inline ExactMatrix torus_example_h() {
  return Rational(1, 25) * ExactMatrix{{37, 82, 6}, {24, 89, 12}, {8, 88, 29}};
}

inline std::vector<ReferenceCheck> paper_checks() {
  std::vector<ReferenceCheck> checks;
  const auto add = [&checks](std::string name, std::function<bool()> f) { checks.push_back({std::move(name), std::move(f)}); };
  add("length of 321 is 3", [] { return length(parse_permutation("321")) == 3; });
  add("213 <= 231 in Bruhat order", [] { return bruhat_leq(parse_permutation("213"), parse_permutation("231")); });
  add("2413 <= 3412 in Bruhat order", [] { return bruhat_leq(parse_permutation("2413"), parse_permutation("3412")); });
  add("[2314,3412] = {2314,2413,3214,3412}", [] {
    std::vector<Permutation> expected;
    for (const char* s : {"2314", "2413", "3214", "3412"}) expected.push_back(parse_permutation(s));
    return interval_elements(iv("2314", "3412")) == expected;
  });
  add("[132,231] = {132,231}", [] {
    return interval_elements(iv("132", "231")) == std::vector<Permutation>{parse_permutation("132"), parse_permutation("231")};
  });
  add("[132,231] and [213,312] are disjoint", [] { return !intervals_intersect(iv("132", "231"), iv("213", "312")); });
  add("perp of [132,312] is [213,231]", [] { return interval_perp(iv("132", "312")) == iv("213", "231"); });
  add("longest element of S_3 is 321", [] { return longest_element(3) == parse_permutation("321"); });
  add("star of 1 in S_4 is 3", [] { return star_involution(1, 4) == 3; });
  add("signed matrix of 312", [] { return signed_perm_matrix(parse_permutation("312")) == ExactMatrix{{0, -1, 0}, {0, 0, -1}, {1, 0, 0}}; });
  add("signed matrix of 321", [] { return signed_perm_matrix(longest_element(3)) == ExactMatrix{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}; });
  add("torus basis minor rows 12 cols 12 is 1/2", [] { return minor(torus_example_basis(), {1, 2}, {1, 2}) == Rational(1, 2); });
  add("torus basis first two columns have minors 1/2, 3/2, 1", [] {
    const auto p = plucker_vector(torus_example_basis().column_block(0, 2));
    return p.at({1, 2}) == Rational(1, 2) && p.at({1, 3}) == Rational(3, 2) && p.at({2, 3}) == 1;
  });
  add("torus basis with row 2 negated, last two columns: -1/10, -7/10, -1/5", [] {
    ExactMatrix g = torus_example_basis();
    for (int j = 0; j < 3; ++j) g.at(1, j) = -g.at(1, j);
    const auto p = plucker_vector(g.column_block(1, 2));
    return p.at({1, 2}) == Rational(-1, 10) && p.at({1, 3}) == Rational(-7, 10) && p.at({2, 3}) == Rational(-1, 5);
  });
  add("Plücker vector of the Gr(2,4) example is (1,3,5,2,4,2)", [] {
    const auto p = plucker_vector(ExactMatrix{{1, 0}, {0, 1}, {-2, 3}, {-4, 5}});
    std::vector<Rational> values;
    for (const auto& [subset, value] : p) values.push_back(value);
    return values == std::vector<Rational>{1, 3, 5, 2, 4, 2};
  });
  add("Plücker vector of v1 is (1,1,1)", [] {
    const auto p = plucker_vector(torus_example_basis().column_block(0, 1));
    return p.at({1}) == 1 && p.at({2}) == 1 && p.at({3}) == 1;
  });
  add("h is totally positive", [] { return positivity_class(torus_example_h()) == PositivityClass::TotallyPositive; });
  add("[[1,1,-1],[-1,0,0],[0,1,0]] lies in B_-B_+", [] { return gaussian_membership(ExactMatrix{{1, 1, -1}, {-1, 0, 0}, {0, 1, 0}}); });
  add("perp of the flag of [[1,0,0],[2,1,0],[3,4,1]]", [] {
    const Flag f(ExactMatrix{{1, 0, 0}, {2, 1, 0}, {3, 4, 1}});
    return flag_perp(f).rep() == ExactMatrix{{5, 2, 1}, {-4, -1, 0}, {1, 0, 0}};
  });
  add("flag of [[1,0,0],[2,1,0],[3,4,1]] is TP and its perp is TN", [] {
    const Flag f(ExactMatrix{{1, 0, 0}, {2, 1, 0}, {3, 4, 1}});
    return flag_sign_class(f) == FlagSignClass::TotallyPositive && flag_sign_class(flag_perp(f)) == FlagSignClass::TotallyNegative;
  });
  add("flag of [[1,0,0],[1,0,-1],[0,1,0]] lies in cell [132,231]", [] {
    return cell_of(Flag(ExactMatrix{{1, 0, 0}, {1, 0, -1}, {0, 1, 0}}), CellSide::TNN).interval == iv("132", "231");
  });
  add("one-parameter samples of [132,231] and [213,312] match the displayed families", [] {
    return mr_sample(iv("132", "231"), {1}).rep() == ExactMatrix{{1, 0, 0}, {1, 0, -1}, {0, 1, 0}} &&
           mr_sample(iv("213", "312"), {1}).rep() == ExactMatrix{{0, -1, 0}, {1, 0, 0}, {1, 0, 1}};
  });
  add("flags of [132,231] and the perp of [213,312] are opposed", [] {
    const Flag f(ExactMatrix{{1, 0, 0}, {1, 0, -1}, {0, 1, 0}});
    const Flag g = flag_perp(Flag(ExactMatrix{{0, -1, 0}, {1, 0, 0}, {1, 0, 1}}));
    return opposed_flags(f, g) && opposed_via_maximal_parabolics(f, g);
  });
  add("[132,231] and [213,312] are opposed", [] { return opposed_intervals(iv("132", "231"), iv("213", "312")); });
  add("[132,231] and [213,312] are opposed for sampled a, b", [] { return opposed_intervals_numeric(iv("132", "231"), iv("213", "312"), 3, 0); });
  add("[1342,2341] and [2314,3412] are opposed", [] { return opposed_intervals(iv("1342", "2341"), iv("2314", "3412")); });
  add("[1342,2341] and [3124,4123] are not opposed", [] { return !opposed_intervals(iv("1342", "2341"), iv("3124", "4123")); });
  add("their polytopes meet at (2,3,2,3)", [] {
    const auto w = hull_intersection(bip_vertices(iv("1342", "2341")), bip_vertices(iv("3124", "4123")));
    return w && *w == Point{2, 3, 2, 3};
  });
  add("S_3 has exactly one opposed disjoint pair, {[132,231],[213,312]}", [] {
    const auto r = census_opposed(3, 1);
    for (const auto& e : r.entries)
      if (e.opposed && !e.intersect)
        return r.opposed_disjoint == 1 && e.first == iv("132", "231") && e.second == iv("213", "312");
    return false;
  });
  add("S_2: only [e,e] and [w0,w0] are not opposed", [] {
    const auto r = census_opposed(2, 1);
    std::size_t bad = 0;
    for (const auto& e : r.entries)
      if (!e.opposed) bad += (e.first == iv("12", "12") && e.second == iv("21", "21")) ? 1 : 100;
    return bad == 1;
  });
  add("the torus basis is totally positive", [] { return torus_positive(TorusBasis(torus_example_basis())); });
  add("h has eigenvalues 5, 1, 1/5 on the torus basis", [] {
    return eigen_verify(torus_example_h(), {5, 1, Rational(1, 5)}, TorusBasis(torus_example_basis()));
  });
  add("the standard torus is nonnegative", [] { return torus_nonnegative(TorusBasis(ExactMatrix::identity(3))); });
  add("B1, B1', B2, B2' memberships are (true, true, true, false)", [] {
    const auto r = counterexample_suite();
    for (const auto& c : r.memberships)
      if (!c.passed()) return false;
    return true;
  });
  add("nonnegative elements of B1 have a repeated eigenvalue d", [] {
    const auto r = counterexample_suite();
    return r.repeated_root_hits == r.family_parameters.size();
  });
  add("S_2 framed cells: f-vector (2,4,1), top cell ([e,s1],[e,s1])", [] {
    const auto r = framed_cell_census(2);
    return r.f_vector == std::map<int, std::size_t>{{0, 2}, {1, 4}, {2, 1}} && r.top_cells.size() == 1 &&
           r.top_cells[0].first == iv("12", "21") && r.top_cells[0].second == iv("12", "21");
  });
  add("amplituhedron case is well-defined", [] {
    const Subspace w(ExactMatrix{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    return grasstope_well_defined(w, iv("1234", "4321"), 1, 1, 0);
  });
  return checks;
}

inline int cmd_verify_paper(const Options& o, std::ostream& out) {
  json rows = json::array();
  bool all = true;
  std::size_t width = 0;
  const auto checks = paper_checks();
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    bool ok = false;
    std::string error;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    rows.push_back({{"check", c.name}, {"pass", ok}});
    if (o.format != "json") {
      out << (ok ? "PASS  " : "FAIL  ") << c.name;
      if (!error.empty()) out << "  (" << error << ")";
      out << '\n';
    }
  }
  if (o.format == "json") out << json{{"checks", rows}, {"all_pass", all}}.dump() << '\n';
  else out << (all ? "all checks pass" : "some checks FAILED") << '\n';
  return all ? kOk : kPropertyFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact opposition and total positivity toolkit for SL_n", "opplab"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;
  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers = {
      {"opp-intervals", cmd_opp_intervals}, {"opp-flags", cmd_opp_flags},     {"census", cmd_census},
      {"bip", cmd_bip},                     {"flag-class", cmd_flag_class},   {"sample-cell", cmd_sample_cell},
      {"torus-check", cmd_torus_check},     {"framed-census", cmd_framed_census}, {"grasstope-check", cmd_grasstope_check},
      {"verify-paper", cmd_verify_paper}};
  const std::map<std::string, std::string> descriptions = {
      {"opp-intervals", "Are two Bruhat intervals opposed (combinatorial and sampled)"},
      {"opp-flags", "Opposition and relative position of two (partial) flags"},
      {"census", "Opposition census over all interval pairs of S_n"},
      {"bip", "Bruhat interval polytopes and their intersection"},
      {"flag-class", "Sign class, perp and cell of a flag"},
      {"sample-cell", "Exact sample of a TNN or TNP cell"},
      {"torus-check", "Positivity of a maximal torus, eigen certificates, conjugation scans"},
      {"framed-census", "Cells of the framed nonnegative tori"},
      {"grasstope-check", "Sampling test of Grassmann polytope well-definedness"},
      {"verify-paper", "Run the built-in table of reference checks"}};
  for (const auto& name : subcommand_names()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    subs[name] = sub;
  }
  auto add_n = [&](const std::string& name, bool required) {
    auto* opt = subs[name]->add_option("--n", o.n, "Size of the symmetric group");
    if (required) opt->required();
  };
  auto add_interval = [&](const std::string& name, const std::string& flag, std::string& target) {
    subs[name]->add_option(flag, target, "Interval as v,w (e.g. 132,231) or JSON {\"v\":[..],\"w\":[..]}")->required();
  };
  auto add_seed = [&](const std::string& name) {
    subs[name]->add_option("--seed", o.seed, "Seed for sampled parameters")->each([&](const std::string&) { o.seed_given = true; });
  };
  for (const auto& name : {"opp-intervals", "bip"}) {
    add_n(name, false);
    add_interval(name, "--I", o.interval_i);
    add_interval(name, "--J", o.interval_j);
  }
  subs["opp-intervals"]->add_option("--trials", o.trials, "Samples per cell for the numeric check (0 skips it)")->check(CLI::NonNegativeNumber);
  add_seed("opp-intervals");
  add_n("opp-flags", false);
  subs["opp-flags"]->add_option("--F", o.flag_f, "First flag: JSON matrix or @file")->required();
  subs["opp-flags"]->add_option("--G", o.flag_g, "Second flag: JSON matrix or @file")->required();
  subs["opp-flags"]->add_option("--F-dims", o.dims_f, "Treat F as a partial flag with these step dimensions");
  subs["opp-flags"]->add_option("--G-dims", o.dims_g, "Treat G as a partial flag with these step dimensions");
  add_n("census", true);
  subs["census"]->add_option("--out", o.out_path, "Write one JSON line per pair");
  add_n("flag-class", false);
  subs["flag-class"]->add_option("--F", o.flag_f, "Flag: JSON matrix or @file")->required();
  add_n("sample-cell", false);
  add_interval("sample-cell", "--I", o.interval_i);
  subs["sample-cell"]->add_option("--side", o.side, "TNN or TNP");
  subs["sample-cell"]->add_option("--params", o.params, "Comma-separated positive parameters");
  add_seed("sample-cell");
  subs["torus-check"]->add_option("--basis", o.basis, "Eigenbasis as columns: JSON matrix or @file");
  subs["torus-check"]->add_option("--h", o.h, "Matrix to certify against the basis");
  subs["torus-check"]->add_option("--eigenvalues", o.eigenvalues, "Comma-separated eigenvalues, one per column");
  subs["torus-check"]->add_option("--g1", o.g1, "Unipotent lower triangular factor");
  subs["torus-check"]->add_option("--g2", o.g2, "Unipotent upper triangular factor");
  subs["torus-check"]->add_option("--ratios", o.ratios, "Comma-separated simple-root ratios to probe");
  add_n("framed-census", true);
  subs["framed-census"]->add_option("--out", o.out_path, "Write one JSON line per cell");
  add_n("grasstope-check", false);
  add_interval("grasstope-check", "--I", o.interval_i);
  subs["grasstope-check"]->add_option("--W", o.subspace_w, "Basis of W as columns: JSON matrix or @file")->required();
  subs["grasstope-check"]->add_option("--k", o.k, "Step of the flag whose complement is tested");
  subs["grasstope-check"]->add_option("--trials", o.trials, "Samples per face");
  add_seed("grasstope-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kInvalidInput;
  }
  for (const auto& name : subcommand_names()) {
    if (!subs[name]->parsed()) continue;
    try {
      return handlers.at(name)(o, out);
    } catch (const InputError& e) {
      err << "invalid input: " << e.what() << '\n';
      return kInvalidInput;
    } catch (const InvariantViolation& e) {
      err << "property failed: " << e.what() << '\n';
      return kPropertyFailed;
    }
  }
  err << app.help();
  return kInvalidInput;
}

}  // namespace opplab::cli
