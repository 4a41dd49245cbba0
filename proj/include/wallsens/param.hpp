#pragma once

#include <stdexcept>
#include <string>

namespace wallsens {

// Identifies one sensitivity parameter of a problem. Layer indices are
// 1-based to match the usual k1, c2, ... naming of layered walls.
struct ParamId {
    enum class Kind { Conductivity, Capacity, GlassTransmissivity, GlassReflectivity };

    Kind kind = Kind::Conductivity;
    int layer = 1;  // 1-based; ignored for glass optics parameters

    static ParamId conductivity(int layer_1based) {
        return ParamId{Kind::Conductivity, layer_1based};
    }
    static ParamId capacity(int layer_1based) {
        return ParamId{Kind::Capacity, layer_1based};
    }
    static ParamId glass_transmissivity() { return ParamId{Kind::GlassTransmissivity, 0}; }
    static ParamId glass_reflectivity() { return ParamId{Kind::GlassReflectivity, 0}; }

    bool is_layer_param() const {
        return kind == Kind::Conductivity || kind == Kind::Capacity;
    }
    int layer_index() const { return layer - 1; }

    std::string name() const {
        switch (kind) {
            case Kind::Conductivity: return "k" + std::to_string(layer);
            case Kind::Capacity: return "c" + std::to_string(layer);
            case Kind::GlassTransmissivity: return "tau";
            case Kind::GlassReflectivity: return "rho";
        }
        return "?";
    }

    friend bool operator==(const ParamId& a, const ParamId& b) {
        return a.kind == b.kind && (a.is_layer_param() ? a.layer == b.layer : true);
    }
    friend bool operator!=(const ParamId& a, const ParamId& b) { return !(a == b); }
};

// Parses "k1", "c3", "tau", "rho".
ParamId parse_param(const std::string& text);

}  // namespace wallsens
