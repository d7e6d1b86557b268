#ifndef LEBOUND_IO_HPP
#define LEBOUND_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "lebound/bounds.hpp"
#include "lebound/linext.hpp"
#include "lebound/majorize.hpp"
#include "lebound/partition.hpp"
#include "lebound/poset.hpp"

namespace lebound {

// Key order is fixed everywhere so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

enum class PosetFormat { auto_detect, json, text };

// {"n": <int>, "covers": [[u,v], ...]}, pairs meaning u < v.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& doc);

// One "u<v" per line; blank lines and '#' comments ignored; optional
// "n=<int>" header, otherwise n is 1 + the largest index mentioned.
Poset poset_from_text(const std::string& text);

// Dispatches on format; auto_detect treats a leading '{' as JSON.
Poset parse_poset(const std::string& text, PosetFormat format);
Poset load_poset(std::istream& in, PosetFormat format);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& doc);

// {"elems": [..]}, accepted in any order.
Json multiset_to_json(const Multiset& m);
Multiset multiset_from_json(const Json& doc);

// {"ranks": [..]}; the 0 sentinel is allowed at exactly one position.
Json linear_extension_to_json(const LinearExtension& ext);
LinearExtension linear_extension_from_json(const Json& doc);

Json bounds_report_to_json(const BoundsReport& report);

// Nearest double to the value printed with 12 significant digits; its
// shortest round-trip form never exceeds those digits.
double round_12sig(double v);
std::string format_12sig(double v);

} // namespace lebound

#endif
