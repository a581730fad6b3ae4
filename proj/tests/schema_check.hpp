#pragma once

// Minimal JSON Schema checker covering exactly the subset the shipped
// schemas use: type, enum, properties, required, additionalProperties,
// items, oneOf, and sibling-file $ref.

#include <fstream>
#include <map>
#include <string>

#include "matroot/serialize.hpp"

namespace schema_check {

using matroot::Json;

inline const Json& load_schema(const std::string& name) {
    static std::map<std::string, Json> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    std::ifstream in(std::string(MATROOT_SCHEMA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("schema_check: cannot open schema " + name);
    return cache.emplace(name, Json::parse(in)).first->second;
}

inline bool type_matches(const Json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    if (t == "number") return value.is_number();
    throw std::runtime_error("schema_check: unknown type " + t);
}

inline bool validate(const Json& value, const Json& schema) {
    if (schema.contains("$ref")) {
        return validate(value, load_schema(schema["$ref"].get<std::string>()));
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const Json& alt : schema["oneOf"]) {
            if (validate(value, alt)) ++hits;
        }
        if (hits != 1) return false;
    }
    if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
        return false;
    }
    if (schema.contains("enum")) {
        bool listed = false;
        for (const Json& e : schema["enum"]) {
            if (e == value) listed = true;
        }
        if (!listed) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const Json& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) return false;
            }
        }
        static const Json kNoProps = Json::object();
        const Json& props = schema.contains("properties") ? schema["properties"] : kNoProps;
        bool closed = schema.contains("additionalProperties") &&
                      schema["additionalProperties"].is_boolean() &&
                      !schema["additionalProperties"].get<bool>();
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validate(it.value(), props[it.key()])) return false;
            } else if (closed) {
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const Json& item : value) {
            if (!validate(item, schema["items"])) return false;
        }
    }
    return true;
}

inline bool validate_against(const Json& value, const std::string& schema_file) {
    return validate(value, load_schema(schema_file));
}

}  // namespace schema_check
