#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace contact {

// shortest deterministic round-trip formatting used for every numeric output
std::string format_double(double v);

// Rows are pre-formatted cells; comments become leading '# ' lines so the
// file stays loadable by the usual CSV readers.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

std::string render_csv(const CsvTable& table);

std::uint64_t fnv1a64(const void* data, std::size_t n);
std::uint64_t fnv1a64(const std::string& s);
std::string hash_hex(std::uint64_t h);

bool write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path, bool* ok = nullptr);

}  // namespace contact
