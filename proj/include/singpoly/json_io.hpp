#ifndef SINGPOLY_JSON_IO_HPP
#define SINGPOLY_JSON_IO_HPP

#include "singpoly/oracle.hpp"
#include "singpoly/singular.hpp"

#include <json.hpp>

namespace singpoly {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const KappaPoly& p);
Json to_json(const KappaRatio& r);
Json to_json(const Composition& a);
Json to_json(const KPoly& f);
Json to_json(const QPoly& f);
Json to_json(const JackPoly& z);
Json to_json(const SingularLabel& L);
Json to_json(const Tableau& t);
Json to_json(const Matrix<Rational>& a);
Json to_json(const KernelReport& r);
Json module_json(const SingularModule& module, const IsotypeReport* iso = nullptr,
                 const SeminormalReport* semi = nullptr);

Rational rational_from_json(const Json& j);
KappaPoly kappa_poly_from_json(const Json& j);
KappaRatio kappa_ratio_from_json(const Json& j);
KPoly kpoly_from_json(const Json& j);
JackPoly jack_from_json(const Json& j);

} // namespace singpoly

#endif
