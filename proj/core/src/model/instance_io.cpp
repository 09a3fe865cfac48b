#include "emtedge/model/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "emtedge/errors.hpp"

namespace emtedge::model {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

auto position_json(Position const& p) -> ordered_json { return ordered_json::array({p[0], p[1], p[2]}); }

// Field access with the element path in every diagnostic.
class Reader {
public:
    Reader(json const& node, std::string where) : node_(node), where_(std::move(where)) {
        if (!node_.is_object()) {
            fail("expected an object");
        }
    }

    [[nodiscard]] auto at(char const* key) const -> json const& {
        auto it = node_.find(key);
        if (it == node_.end()) {
            fail(std::string("missing field '") + key + "'");
        }
        return *it;
    }

    [[nodiscard]] auto number(char const* key) const -> double {
        auto const& v = at(key);
        if (!v.is_number()) {
            fail(std::string("field '") + key + "' must be a number");
        }
        return v.get<double>();
    }

    [[nodiscard]] auto index(char const* key) const -> std::size_t {
        auto const& v = at(key);
        if (!v.is_number_unsigned()) {
            fail(std::string("field '") + key + "' must be a non-negative integer");
        }
        return v.get<std::size_t>();
    }

    [[nodiscard]] auto array(char const* key) const -> json const& {
        auto const& v = at(key);
        if (!v.is_array()) {
            fail(std::string("field '") + key + "' must be an array");
        }
        return v;
    }

    [[noreturn]] void fail(std::string const& what) const { throw ParseError(where_ + ": " + what); }

    [[nodiscard]] auto where() const -> std::string const& { return where_; }

private:
    json const& node_;
    std::string where_;
};

auto parse_position(json const& v, std::string const& where) -> Position {
    if (!v.is_array() || v.size() != 3) {
        throw ParseError(where + ": position must be an array of 3 numbers");
    }
    Position p{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v[i].is_number()) {
            throw ParseError(where + ": position must be an array of 3 numbers");
        }
        p[i] = v[i].get<double>();
    }
    return p;
}

auto parse_numbers(json const& v, std::string const& where) -> std::vector<double> {
    std::vector<double> out;
    out.reserve(v.size());
    for (auto const& x : v) {
        if (!x.is_number()) {
            throw ParseError(where + ": expected only numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

auto element_where(char const* list, std::size_t i, json const& node) -> std::string {
    auto where = std::string(list) + "[" + std::to_string(i) + "]";
    if (node.is_object()) {
        auto it = node.find("id");
        if (it != node.end() && it->is_number_unsigned()) {
            where += " (id " + std::to_string(it->get<std::size_t>()) + ")";
        }
    }
    return where;
}

} // namespace

auto to_json(EdgeInstance const& inst) -> ordered_json {
    ordered_json doc = ordered_json::object();

    auto clouds = ordered_json::array();
    for (auto const& c : inst.edge_clouds) {
        ordered_json o;
        o["id"] = c.id;
        o["position"] = position_json(c.position);
        o["capacity"] = c.capacity;
        o["cpu"] = c.cpu;
        o["energy_per_service"] = c.energy_per_service;
        o["coverage_radius"] = c.coverage_radius;
        o["price_per_second"] = c.price_per_second;
        o["fixed_cost"] = c.fixed_cost;
        o["line_cost"] = c.line_cost;
        clouds.push_back(std::move(o));
    }
    doc["edge_clouds"] = std::move(clouds);

    auto users = ordered_json::array();
    for (auto const& u : inst.users) {
        ordered_json o;
        o["id"] = u.id;
        o["service_requirement"] = u.service_requirement;
        o["compute_demand"] = u.compute_demand;
        o["transmit_rate"] = u.transmit_rate;
        o["comm_latency"] = u.comm_latency;
        users.push_back(std::move(o));
    }
    doc["users"] = std::move(users);

    auto stations = ordered_json::array();
    for (auto const& s : inst.base_stations) {
        stations.push_back(position_json(s));
    }
    doc["base_stations"] = std::move(stations);

    auto terminals = ordered_json::array();
    for (auto const& t : inst.terminals) {
        ordered_json o;
        o["id"] = t.id;
        o["local_speed"] = t.local_speed;
        o["local_power"] = t.local_power;
        auto subtasks = ordered_json::array();
        for (auto const& st : t.subtasks) {
            ordered_json so;
            so["data_bits"] = st.data_bits;
            so["local_cycles"] = st.local_cycles;
            so["edge_cycles"] = st.edge_cycles;
            subtasks.push_back(std::move(so));
        }
        o["subtasks"] = std::move(subtasks);
        o["transport_cost"] = t.transport_cost;
        terminals.push_back(std::move(o));
    }
    doc["terminals"] = std::move(terminals);

    ordered_json constants;
    constants["edge_power"] = inst.constants.edge_power;
    doc["constants"] = std::move(constants);
    doc["schema_version"] = kInstanceSchemaVersion;
    return doc;
}

auto instance_from_json(json const& doc) -> EdgeInstance {
    Reader const top(doc, "instance");
    auto const& version = top.at("schema_version");
    if (!version.is_number_integer() || version.get<int>() != kInstanceSchemaVersion) {
        top.fail("unsupported schema_version (expected " + std::to_string(kInstanceSchemaVersion) + ")");
    }

    EdgeInstance inst;
    auto const& clouds = top.array("edge_clouds");
    for (std::size_t i = 0; i < clouds.size(); ++i) {
        Reader const r(clouds[i], element_where("edge_clouds", i, clouds[i]));
        EdgeCloud c;
        c.id = r.index("id");
        c.position = parse_position(r.at("position"), r.where());
        c.capacity = r.number("capacity");
        c.cpu = r.number("cpu");
        c.energy_per_service = r.number("energy_per_service");
        c.coverage_radius = r.number("coverage_radius");
        c.price_per_second = r.number("price_per_second");
        c.fixed_cost = r.number("fixed_cost");
        c.line_cost = r.number("line_cost");
        inst.edge_clouds.push_back(c);
    }

    auto const& users = top.array("users");
    for (std::size_t u = 0; u < users.size(); ++u) {
        Reader const r(users[u], element_where("users", u, users[u]));
        User user;
        user.id = r.index("id");
        user.service_requirement = r.number("service_requirement");
        user.compute_demand = r.number("compute_demand");
        user.transmit_rate = r.number("transmit_rate");
        user.comm_latency = parse_numbers(r.array("comm_latency"), r.where() + ".comm_latency");
        inst.users.push_back(std::move(user));
    }

    auto const& stations = top.array("base_stations");
    for (std::size_t s = 0; s < stations.size(); ++s) {
        inst.base_stations.push_back(parse_position(stations[s], "base_stations[" + std::to_string(s) + "]"));
    }

    auto const& terminals = top.array("terminals");
    for (std::size_t k = 0; k < terminals.size(); ++k) {
        Reader const r(terminals[k], element_where("terminals", k, terminals[k]));
        Terminal t;
        t.id = r.index("id");
        t.local_speed = r.number("local_speed");
        t.local_power = r.number("local_power");
        auto const& subtasks = r.array("subtasks");
        for (std::size_t n = 0; n < subtasks.size(); ++n) {
            Reader const sr(subtasks[n], r.where() + ".subtasks[" + std::to_string(n) + "]");
            t.subtasks.push_back({sr.number("data_bits"), sr.number("local_cycles"), sr.number("edge_cycles")});
        }
        t.transport_cost = r.number("transport_cost");
        inst.terminals.push_back(std::move(t));
    }

    Reader const constants(top.at("constants"), "constants");
    inst.constants.edge_power = constants.number("edge_power");
    return inst;
}

auto dump_instance(EdgeInstance const& instance) -> std::string { return to_json(instance).dump(2) + "\n"; }

void save_instance(EdgeInstance const& instance, std::ostream& sink) {
    sink << dump_instance(instance);
    if (!sink) {
        throw std::ios_base::failure("failed to write instance");
    }
}

void save_instance(EdgeInstance const& instance, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    }
    save_instance(instance, out);
}

auto load_instance(std::istream& source) -> EdgeInstance {
    json doc;
    try {
        doc = json::parse(source);
    } catch (json::parse_error const& e) {
        throw ParseError(std::string("instance is not valid JSON: ") + e.what());
    }
    auto inst = instance_from_json(doc);
    validate(inst);
    return inst;
}

auto load_instance(std::filesystem::path const& path) -> EdgeInstance {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path.string() + "' for reading");
    }
    return load_instance(in);
}

auto instance_fingerprint(EdgeInstance const& instance) -> std::uint64_t {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : dump_instance(instance)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace emtedge::model
