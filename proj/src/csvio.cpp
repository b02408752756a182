#include "contact/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace contact {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_csv(const CsvTable& table) {
    std::string out;
    for (const auto& c : table.comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            const std::string& c = cells[i];
            if (c.find_first_of(",\"\n") == std::string::npos) {
                out += c;
            } else {
                out += '"';
                for (char ch : c) {
                    if (ch == '"') out += '"';
                    out += ch;
                }
                out += '"';
            }
        }
        out += '\n';
    };
    if (!table.header.empty()) line(table.header);
    for (const auto& row : table.rows) line(row);
    return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    return static_cast<bool>(out);
}

std::string read_text_file(const std::string& path, bool* ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        if (ok) *ok = false;
        return "";
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (ok) *ok = true;
    return buf.str();
}

}  // namespace contact
