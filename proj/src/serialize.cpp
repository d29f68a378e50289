#include <nvg/serialize.hpp>

#include <nvg/counting.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace nvg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string bigint_str(const BigInt& v) { return v.str(); }

ordered_json rational_json(const BigRational& q) {
  return ordered_json{{"num", num(q).str()}, {"den", den(q).str()}};
}

ordered_json polynomial_json(const RationalPolynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const BigRational& c : p.coeffs) arr.push_back(rational_json(c));
  return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string rational_text(const BigRational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string polynomial_text(const RationalPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const BigRational& c = p.coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigRational mag = negative ? BigRational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coeff = rational_text(mag);
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + " ";
      out += "k";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (first) return "0";
  return out;
}

std::string to_table(const GrowthSeries& s) {
  std::size_t wk = 1, wq = 1, wp = 1;
  for (const GrowthRow& row : s.rows) {
    wk = std::max(wk, std::to_string(row.k).size());
    wq = std::max(wq, row.q.str().size());
    wp = std::max(wp, row.p.str().size());
  }
  wk = std::max(wk, std::size_t(1));
  std::ostringstream out;
  auto pad = [](const std::string& v, std::size_t w) {
    return std::string(w > v.size() ? w - v.size() : 0, ' ') + v;
  };
  out << "n = " << s.n << ", k_max = " << s.k_max << "\n";
  out << pad("k", wk) << "  " << pad("q", wq) << "  " << pad("p", wp) << "  source\n";
  for (const GrowthRow& row : s.rows)
    out << pad(std::to_string(row.k), wk) << "  " << pad(row.q.str(), wq) << "  "
        << pad(row.p.str(), wp) << "  " << source_name(row.source) << "\n";
  return out.str();
}

std::string to_csv(const GrowthSeries& s) {
  std::string out = "k,q,p,source\n";
  for (const GrowthRow& row : s.rows) {
    out += std::to_string(row.k);
    out += ",";
    out += row.q.str();
    out += ",";
    out += row.p.str();
    out += ",";
    out += source_name(row.source);
    out += "\n";
  }
  return out;
}

std::string to_json(const GrowthSeries& s) {
  ordered_json j;
  j["n"] = s.n;
  j["k_max"] = s.k_max;
  ordered_json rows = ordered_json::array();
  for (const GrowthRow& row : s.rows)
    rows.push_back(ordered_json{{"k", row.k},
                                {"q", bigint_str(row.q)},
                                {"p", bigint_str(row.p)},
                                {"source", source_name(row.source)}});
  j["rows"] = rows;
  return dump(j);
}

std::string to_table(const std::vector<HypothesisReport>& reports, int k_max) {
  std::ostringstream out;
  out << "hypothesis survey, k_max = " << k_max << "\n";
  for (const HypothesisReport& rep : reports) {
    out << "\nn = " << rep.n << "\n";
    out << "  phi(n)                    : " << rep.phi_n << "\n";
    out << "  degree observed           : "
        << (rep.degree_observed ? std::to_string(*rep.degree_observed) : "none") << "\n";
    out << "  degree matches phi(n)     : " << yes_no(rep.degree_matches) << "\n";
    out << "  polynomial on tested range: " << yes_no(rep.polynomial_on_tested_range) << "\n";
    out << "  interpolant               : " << polynomial_text(rep.interpolant) << "\n";
    out << "  leading coefficient       : " << rational_text(rep.leading_coeff) << "\n";
    out << "  leading = 1/(n-1)!        : "
        << (rep.leading_matches_factorial ? yes_no(*rep.leading_matches_factorial)
                                          : std::string("n/a"))
        << "\n";
    out << "  in span of (k + k^2)^i    : " << yes_no(rep.kk2_representable) << "\n";
    if (rep.kk2) {
      out << "  (k + k^2) coefficients    :";
      for (const BigRational& c : *rep.kk2) out << " " << rational_text(c);
      out << "\n";
    }
    out << "  integer valued            : " << yes_no(rep.binomial_c.has_value()) << "\n";
    if (rep.binomial_c) {
      out << "  binomial-basis integers   :";
      for (const BigInt& c : *rep.binomial_c) out << " " << c.str();
      out << "\n";
    }
    out << "  integer check range       : k = " << rep.integer_valued_checked_range.first
        << ".." << rep.integer_valued_checked_range.second << "\n";
    out << "  coincides with            : ";
    if (rep.coincident_with.empty()) {
      out << "none";
    } else {
      for (std::size_t i = 0; i < rep.coincident_with.size(); ++i)
        out << (i ? " " : "") << "n=" << rep.coincident_with[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const std::vector<HypothesisReport>& reports) {
  std::string out =
      "n,phi,degree_observed,degree_matches,polynomial_on_tested_range,"
      "leading_num,leading_den,leading_matches_factorial,kk2_representable,"
      "integer_valued,coincident_with\n";
  for (const HypothesisReport& rep : reports) {
    out += std::to_string(rep.n);
    out += "," + std::to_string(rep.phi_n);
    out += "," + (rep.degree_observed ? std::to_string(*rep.degree_observed) : std::string());
    out += "," + yes_no(rep.degree_matches);
    out += "," + yes_no(rep.polynomial_on_tested_range);
    out += "," + num(rep.leading_coeff).str();
    out += "," + den(rep.leading_coeff).str();
    out += "," + (rep.leading_matches_factorial ? yes_no(*rep.leading_matches_factorial)
                                                : std::string("na"));
    out += "," + yes_no(rep.kk2_representable);
    out += "," + yes_no(rep.binomial_c.has_value());
    out += ",";
    for (std::size_t i = 0; i < rep.coincident_with.size(); ++i)
      out += (i ? ";" : "") + std::to_string(rep.coincident_with[i]);
    out += "\n";
  }
  return out;
}

std::string to_json(const std::vector<HypothesisReport>& reports, int k_max) {
  ordered_json j;
  j["k_max"] = k_max;
  ordered_json arr = ordered_json::array();
  for (const HypothesisReport& rep : reports) {
    ordered_json r;
    r["n"] = rep.n;
    r["phi_n"] = rep.phi_n;
    if (rep.degree_observed)
      r["degree_observed"] = *rep.degree_observed;
    else
      r["degree_observed"] = nullptr;
    r["degree_matches"] = rep.degree_matches;
    r["polynomial_on_tested_range"] = rep.polynomial_on_tested_range;
    r["monomial_coeffs"] = polynomial_json(rep.interpolant);
    r["leading_coeff"] = rational_json(rep.leading_coeff);
    if (rep.leading_matches_factorial)
      r["leading_matches_factorial"] = *rep.leading_matches_factorial;
    else
      r["leading_matches_factorial"] = nullptr;
    r["kk2_representable"] = rep.kk2_representable;
    if (rep.kk2) {
      ordered_json arr2 = ordered_json::array();
      for (const BigRational& c : *rep.kk2) arr2.push_back(rational_json(c));
      r["kk2_coeffs"] = arr2;
    } else {
      r["kk2_coeffs"] = nullptr;
    }
    if (rep.binomial_c) {
      ordered_json arr2 = ordered_json::array();
      for (const BigInt& c : *rep.binomial_c) arr2.push_back(c.str());
      r["binomial_c"] = arr2;
    } else {
      r["binomial_c"] = nullptr;
    }
    r["integer_valued_checked_range"] = ordered_json::array(
        {rep.integer_valued_checked_range.first, rep.integer_valued_checked_range.second});
    r["coincident_with"] = rep.coincident_with;
    arr.push_back(r);
  }
  j["reports"] = arr;
  return dump(j);
}

}  // namespace nvg
