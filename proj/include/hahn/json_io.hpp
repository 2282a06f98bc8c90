#ifndef HAHN_JSON_IO_HPP
#define HAHN_JSON_IO_HPP

#include <string>

#include "hahn/certificate.hpp"
#include "hahn/relation.hpp"

namespace hahn {

/// Canonical JSON renderings: fixed key order, normalized rationals,
/// two-space indent, trailing newline. Identical inputs produce identical
/// bytes.
std::string certificate_to_json(const Certificate& cert);
std::string relation_report_to_json(const RelationReport& report);
std::string series_to_json(const Series& value);

} // namespace hahn

#endif
