#ifndef A2RR_JSON_IO_HPP
#define A2RR_JSON_IO_HPP

#include <json.hpp>

#include "a2rr/laurent_poly.hpp"
#include "a2rr/series.hpp"

namespace a2rr {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);
Json to_json(const BiSeries& s);
BiSeries biseries_from_json(const Json& j);

}  // namespace a2rr

#endif  // A2RR_JSON_IO_HPP
