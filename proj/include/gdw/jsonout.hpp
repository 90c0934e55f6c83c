#pragma once

#include <string>
#include <vector>

namespace gdw {

// Streaming JSON writer with pinned formatting: finite doubles print with 12
// significant digits, +infinity prints as {"infinite": true}. Output bytes
// depend only on the call sequence, never on locale or platform defaults.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);

    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& null();

    JsonWriter& value(const std::vector<double>& v);
    JsonWriter& value(const std::vector<int>& v);

    const std::string& str() const { return out_; }

    static std::string format_double(double v); // "%.12g", finite input only

private:
    std::string out_;
    std::vector<char> stack_;   // 'o' object, 'a' array
    std::vector<bool> first_;
    bool pending_key_ = false;

    void before_value();
    void raw(const std::string& s) { out_ += s; }
};

std::string json_escape(const std::string& s);

} // namespace gdw
