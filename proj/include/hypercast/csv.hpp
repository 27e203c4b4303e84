#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypercast {

// CSV with byte-stable formatting: '.' decimal point, ',' separator, LF rows.
// Doubles print as the shortest string that round-trips, so identical values
// always serialize identically.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    CsvWriter& field(std::int64_t value);
    CsvWriter& field(int value) { return field(static_cast<std::int64_t>(value)); }
    CsvWriter& field(std::uint64_t value);
    CsvWriter& field(double value);
    CsvWriter& field(bool value);
    CsvWriter& field(const std::string& value);
    CsvWriter& blank_field();
    void end_row();

    const std::string& text() const { return text_; }
    void write_file(const std::string& path) const;

  private:
    void separator();

    std::size_t columns_ = 0;
    std::size_t row_fields_ = 0;
    std::string text_;
};

std::string format_double(double value);

}  // namespace hypercast
