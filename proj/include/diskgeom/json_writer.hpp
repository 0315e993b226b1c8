#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "diskgeom/complex_plane.hpp"

namespace diskgeom {

/// Minimal JSON emitter with caller-controlled key order, LF line endings
/// and reals at 15 significant digits. The exact layout is part of the CLI
/// contract, hence the hand-rolled writer: objects one key per line,
/// arrays inline.
class JsonWriter {
public:
    std::string take() && { return std::move(out_); }

    void begin_object() {
        pre_value();
        out_ += "{";
        lv_.push_back({Ctx::Object, true});
    }
    void end_object() {
        lv_.pop_back();
        out_ += "\n";
        indent();
        out_ += "}";
        if (lv_.empty()) out_ += "\n";
    }
    void begin_array() {
        pre_value();
        out_ += "[";
        lv_.push_back({Ctx::Array, true});
    }
    void end_array() {
        lv_.pop_back();
        out_ += "]";
    }

    void key(const std::string& k) {
        if (!lv_.back().first) out_ += ",";
        out_ += "\n";
        lv_.back().first = false;
        indent();
        out_ += "\"" + escape(k) + "\": ";
        after_key_ = true;
    }

    void value(double v) {
        pre_value();
        out_ += fmt(v);
    }
    void value(int v) { value(static_cast<double>(v)); }
    void value(std::uint64_t v) {
        pre_value();
        out_ += std::to_string(v);
    }
    void value(bool v) {
        pre_value();
        out_ += v ? "true" : "false";
    }
    void value(const std::string& s) {
        pre_value();
        out_ += "\"" + escape(s) + "\"";
    }
    void value(const char* s) { value(std::string(s)); }
    void null() {
        pre_value();
        out_ += "null";
    }
    void value(cplx z) {
        begin_array();
        value(z.real());
        value(z.imag());
        end_array();
    }
    void value(const ExtendedPoint& p) {
        if (p.is_infinity())
            value("infinity");
        else
            value(p.value());
    }

    static std::string fmt(double v) {
        if (v == 0.0) v = 0.0;  // normalize -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return buf;
    }

private:
    enum class Ctx { Object, Array };
    struct Level {
        Ctx ctx;
        bool first;
    };

    void pre_value() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (lv_.empty()) return;
        if (!lv_.back().first) out_ += ", ";
        lv_.back().first = false;
    }
    void indent() {
        for (std::size_t i = 0; i < lv_.size(); ++i) out_ += "  ";
    }
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '"' || c == '\\') r += '\\';
            r += c;
        }
        return r;
    }

    std::string out_;
    std::vector<Level> lv_;
    bool after_key_ = false;
};

}  // namespace diskgeom
