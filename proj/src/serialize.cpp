#include "qsymm/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qsymm {

namespace {

VarTablePtr table_for(const Json& vars, const VarTablePtr& table) {
  std::vector<std::string> names = vars.get<std::vector<std::string>>();
  if (table) {
    if (table->names() != names) throw std::invalid_argument("serialized vars do not match the table");
    return table;
  }
  return make_vars(std::move(names));
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  const std::size_t nv = p.table()->size();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (std::size_t i = 0; i < nv; ++i) exp.push_back(t.mono.exp[i]);
    terms.push_back({{"exp", exp},
                     {"num", t.coeff.get_num().get_str(10)},
                     {"den", t.coeff.get_den().get_str(10)}});
  }
  return {{"vars", p.table()->names()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j, const VarTablePtr& table) {
  VarTablePtr tab = table_for(j.at("vars"), table);
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exp = t.at("exp");
    if (exp.size() != tab->size()) throw std::invalid_argument("exponent vector length mismatch");
    Term term;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      long e = exp[i].get<long>();
      check_exponent(e);
      term.mono.exp[i] = static_cast<Exponent>(e);
    }
    term.coeff = parse_scalar(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    if (term.coeff == 0) throw std::invalid_argument("stored zero coefficient");
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(tab, std::move(terms));
}

Json ratfunc_to_json(const RatFunc& r) {
  return {{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

RatFunc ratfunc_from_json(const Json& j, const VarTablePtr& table) {
  LaurentPoly num = poly_from_json(j.at("num"), table);
  LaurentPoly den = poly_from_json(j.at("den"), num.table());
  return RatFunc(num, den);
}

Json matrix_to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(ratfunc_to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"vars", m.table()->names()}, {"entries", entries}};
}

PolyMatrix matrix_from_json(const Json& j, const VarTablePtr& table) {
  VarTablePtr tab = table_for(j.at("vars"), table);
  auto rows = j.at("rows").get<std::size_t>();
  auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  PolyMatrix m(tab, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = ratfunc_from_json(entries[i * cols + c], tab);
  return m;
}

std::string poly_to_csv(const LaurentPoly& p) {
  std::ostringstream os;
  const auto& names = p.table()->names();
  for (const auto& n : names) os << n << ",";
  os << "num,den\n";
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < names.size(); ++i) os << t.mono.exp[i] << ",";
    os << t.coeff.get_num().get_str(10) << "," << t.coeff.get_den().get_str(10) << "\n";
  }
  return os.str();
}

}  // namespace qsymm
