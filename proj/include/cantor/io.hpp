#pragma once

#include <string>
#include <string_view>

#include "cantor/conditions.hpp"
#include "cantor/ruler.hpp"

namespace cantor {

// {"kind":"shift","n":k} | {"kind":"modular","m":3,"F":[1]} |
// {"kind":"louveau","alpha":{"pre":"10","period":"0"}} |
// {"kind":"periodic","pre":[..],"period":[..]} | {"kind":"omega"}
SSpec sspec_from_json(std::string_view text);
std::string sspec_to_json(const SSpec& s);

// {"pre":"10","period":"0"} or the string form "10|0".
AlphaSpec alpha_from_json(std::string_view text);

Bounds bounds_from_json(std::string_view text);
std::string bounds_to_json(const Bounds& b);

inline constexpr int kCertificateVersion = 1;
std::string certificate_to_json(const WitnessCert& c);
WitnessCert certificate_from_json(std::string_view text);

// Recomputes the certificate from its recorded inputs and bounds.
WitnessCert recompute_certificate(const WitnessCert& c);
bool replay_certificate(const WitnessCert& c);

}  // namespace cantor
