#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace conoma {

/// Shortest decimal representation that parses back to the same double
/// (std::to_chars), locale-free. "nan"/"inf" never appear in well-formed runs.
std::string format_double(double value);

/// Minimal RFC 4180 writer: comma separated, CRLF line endings, no quoting
/// (all emitted fields are numeric or bare tokens).
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    CsvWriter& field(const std::string& text);
    CsvWriter& field(double value);
    CsvWriter& field(std::int64_t value);
    void end_row();

  private:
    std::ostream& out_;
    bool row_started_ = false;
};

}  // namespace conoma
