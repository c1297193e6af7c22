#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace mdr {

// Variable alphabet of the weight ring: x (hedges), y (vedges), z (vertices),
// t (the series variable). Each of x, y, z exists in a uniform scalar form and
// an indexed form x[i,j] / y[i,j] / z[i,j]; t is always scalar.
enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

struct VarKey {
    VarKind kind = VarKind::X;
    std::int32_t row = 0;
    std::int32_t col = 0;
    bool indexed = false;

    friend auto operator<=>(const VarKey&, const VarKey&) = default;

    static VarKey x() { return {VarKind::X, 0, 0, false}; }
    static VarKey y() { return {VarKind::Y, 0, 0, false}; }
    static VarKey z() { return {VarKind::Z, 0, 0, false}; }
    static VarKey t() { return {VarKind::T, 0, 0, false}; }
    static VarKey x(int i, int j) { return {VarKind::X, i, j, true}; }
    static VarKey y(int i, int j) { return {VarKind::Y, i, j, true}; }
    static VarKey z(int i, int j) { return {VarKind::Z, i, j, true}; }

    // Laurent (negative) exponents are admitted only on x-kind keys.
    bool laurent_ok() const { return kind == VarKind::X; }

    std::string str() const {
        static const char* names[] = {"x", "y", "z", "t"};
        std::string s = names[static_cast<int>(kind)];
        if (indexed) {
            s += "[" + std::to_string(row) + "," + std::to_string(col) + "]";
        }
        return s;
    }
};

}  // namespace mdr
