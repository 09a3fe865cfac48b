#ifndef EMTEDGE_MODEL_INSTANCE_IO_HPP
#define EMTEDGE_MODEL_INSTANCE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "emtedge/model/instance.hpp"

namespace emtedge::model {

inline constexpr int kInstanceSchemaVersion = 1;

[[nodiscard]] auto to_json(EdgeInstance const& instance) -> nlohmann::ordered_json;

// Structural parse only; throws ParseError naming the offending element.
[[nodiscard]] auto instance_from_json(nlohmann::json const& doc) -> EdgeInstance;

// 2-space indented JSON, keys in schema order, trailing newline.
[[nodiscard]] auto dump_instance(EdgeInstance const& instance) -> std::string;

void save_instance(EdgeInstance const& instance, std::ostream& sink);
void save_instance(EdgeInstance const& instance, std::filesystem::path const& path);

// Parses, then validates. Throws ParseError or ValidationError.
[[nodiscard]] auto load_instance(std::istream& source) -> EdgeInstance;
[[nodiscard]] auto load_instance(std::filesystem::path const& path) -> EdgeInstance;

// Stable 64-bit FNV-1a digest of dump_instance(); used to tie reports to
// the instance they were produced on.
[[nodiscard]] auto instance_fingerprint(EdgeInstance const& instance) -> std::uint64_t;

} // namespace emtedge::model

#endif // EMTEDGE_MODEL_INSTANCE_IO_HPP
