#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssimtk::io {

/// Minimal JSON emitter with deterministic output: fields appear exactly in
/// insertion order and every double is printed with 17 significant digits,
/// so identical inputs serialize to identical bytes. Non-finite doubles
/// (no JSON representation) become null.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(const std::string& name);

    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v);
    JsonWriter& null();

    /// key + value in one step.
    template <typename T>
    JsonWriter& field(const std::string& name, const T& v) {
        key(name);
        return value(v);
    }

    const std::string& str() const { return out_; }

    static std::string format_double(double v);

private:
    void prefix();

    std::string out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

} // namespace ssimtk::io
