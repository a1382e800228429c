#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "catmirror/dissection.hpp"
#include "catmirror/nct.hpp"
#include "catmirror/pcdd.hpp"
#include "catmirror/ternary.hpp"

namespace catmirror {

using Object = std::variant<NctTree, QuadDissection, TernaryTree, Pcdd>;

enum class Kind { nct, qd, ternary, pcdd };

std::string_view to_string(Kind k);
Kind kind_of(const Object& obj);

/// Malformed text; `position` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// One-line canonical text:
//   nct <n>: i-j,...        qd <n>: a-b,...        (<L> <M> <R>) / *
//   pcdd <m>: darts=u>v,... chains=[v0 v1];[...] flag=<index>

std::string format(const NctTree& t);
std::string format(const QuadDissection& q);
std::string format(const TernaryTree& t);
std::string format(const Pcdd& p);
std::string format(const Object& obj);

/// Parse then validate; throws ParseError or ValidationError.
NctTree parse_nct(std::string_view text);
QuadDissection parse_qd(std::string_view text);
TernaryTree parse_ternary(std::string_view text);
Pcdd parse_pcdd(std::string_view text);
Object parse(Kind kind, std::string_view text);
/// Kind inferred from the leading token.
Object parse_any(std::string_view text);

nlohmann::ordered_json to_json(const Object& obj);
Object from_json(const nlohmann::ordered_json& j);

}  // namespace catmirror
