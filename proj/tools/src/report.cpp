#include "conlap_cli/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "conlap/energy.hpp"
#include "conlap/incidence.hpp"
#include "conlap/linalg.hpp"
#include "conlap/morse.hpp"

namespace conlap::cli {

bool Report::consistent() const {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  for (std::size_t k = 0; k < f_vector.size(); ++k) (k % 2 == 0 ? even : odd) += f_vector[k];
  const auto p = static_cast<std::int64_t>(positive);
  const auto q = static_cast<std::int64_t>(negative);
  return euler == p - q && energy == static_cast<long>(euler) && euler == even - odd;
}

Report build_report(const SimplicialComplex& c, std::size_t max_n) {
  if (c.size() > max_n) {
    throw std::length_error("complex has " + std::to_string(c.size()) +
                            " simplices, above the --max-n guard of " + std::to_string(max_n));
  }
  Report r;
  r.n = c.size();
  r.f_vector = f_vector(c).counts;
  r.dimension = c.dimension();
  r.euler = euler_characteristic(c);
  r.fermi = fermi_characteristic(c);
  r.wu = wu_characteristic(c);
  if (c.empty()) return r;

  const IntMatrix l = connection_matrix(c);
  r.determinant = determinant(l);
  const Inertia in = inertia(l);
  r.positive = in.positive;
  r.negative = in.negative;

  const GreenMatrix g(c);
  r.energy = total_energy(g);
  const IncidenceIndex index(c);
  r.rows.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    SimplexRow row;
    row.simplex = c[i].to_string();
    row.parity_sign = c.parity_sign(i);
    row.green_diagonal = g(i, i);
    for (std::size_t j = 0; j < c.size(); ++j) row.potential += g(i, j);
    row.curvature = sphere_curvature(index, i);
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string format_report(const Report& r) {
  std::ostringstream os;
  os << "simplices      " << r.n << "\n";
  os << "f-vector       (";
  for (std::size_t k = 0; k < r.f_vector.size(); ++k) os << (k ? "," : "") << r.f_vector[k];
  os << ")\n";
  os << "dimension      " << r.dimension << "\n";
  os << "euler          " << r.euler << "\n";
  os << "fermi          " << r.fermi << "\n";
  os << "det L          " << r.determinant << "\n";
  os << "energy         " << r.energy << "\n";
  os << "inertia        (" << r.positive << "," << r.negative << ")\n";
  os << "wu             " << r.wu << "\n";
  os << "consistent     " << (r.consistent() ? "yes" : "NO") << "\n";
  if (!r.rows.empty()) {
    std::size_t width = 7;
    for (const auto& row : r.rows) width = std::max(width, row.simplex.size());
    os << "\n" << std::left << std::setw(static_cast<int>(width) + 2) << "simplex" << std::right
       << std::setw(6) << "sign" << std::setw(8) << "g(x,x)" << std::setw(8) << "V(x)"
       << std::setw(8) << "k(x)" << "\n";
    for (const auto& row : r.rows) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << row.simplex << std::right
         << std::setw(6) << row.parity_sign << std::setw(8) << row.green_diagonal.get_str()
         << std::setw(8) << row.potential.get_str() << std::setw(8) << row.curvature << "\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["f_vector"] = r.f_vector;
  j["dimension"] = r.dimension;
  j["euler"] = r.euler;
  j["fermi"] = r.fermi;
  j["det_L"] = r.determinant.get_str();
  j["energy"] = r.energy.get_str();
  j["inertia"] = {{"positive", r.positive}, {"negative", r.negative}};
  j["wu"] = r.wu;
  j["consistent"] = r.consistent();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"simplex", row.simplex},
                    {"sign", row.parity_sign},
                    {"green_diagonal", row.green_diagonal.get_str()},
                    {"potential", row.potential.get_str()},
                    {"curvature", row.curvature}});
  }
  j["simplices"] = std::move(rows);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.n = j.at("n").get<std::size_t>();
  r.f_vector = j.at("f_vector").get<std::vector<std::int64_t>>();
  r.dimension = j.at("dimension").get<int>();
  r.euler = j.at("euler").get<std::int64_t>();
  r.fermi = j.at("fermi").get<int>();
  r.determinant = mpz_class(j.at("det_L").get<std::string>());
  r.energy = mpz_class(j.at("energy").get<std::string>());
  r.positive = j.at("inertia").at("positive").get<std::size_t>();
  r.negative = j.at("inertia").at("negative").get<std::size_t>();
  r.wu = j.at("wu").get<std::int64_t>();
  for (const auto& row : j.at("simplices")) {
    SimplexRow s;
    s.simplex = row.at("simplex").get<std::string>();
    s.parity_sign = row.at("sign").get<int>();
    s.green_diagonal = mpz_class(row.at("green_diagonal").get<std::string>());
    s.potential = mpz_class(row.at("potential").get<std::string>());
    s.curvature = row.at("curvature").get<std::int64_t>();
    r.rows.push_back(std::move(s));
  }
  return r;
}

}  // namespace conlap::cli
