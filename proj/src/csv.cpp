#include "hypercast/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace hypercast {

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, end);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    if (header.empty()) throw std::invalid_argument("CsvWriter: empty header");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

void CsvWriter::separator() {
    if (row_fields_ >= columns_) throw std::logic_error("CsvWriter: too many fields in row");
    if (row_fields_ > 0) text_ += ',';
    ++row_fields_;
}

CsvWriter& CsvWriter::field(std::int64_t value) {
    separator();
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("CsvWriter: int conversion failed");
    text_.append(buf, end);
    return *this;
}

CsvWriter& CsvWriter::field(std::uint64_t value) {
    separator();
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("CsvWriter: int conversion failed");
    text_.append(buf, end);
    return *this;
}

CsvWriter& CsvWriter::field(double value) {
    separator();
    text_ += format_double(value);
    return *this;
}

CsvWriter& CsvWriter::field(bool value) {
    separator();
    text_ += value ? "true" : "false";
    return *this;
}

CsvWriter& CsvWriter::field(const std::string& value) {
    separator();
    for (char c : value)
        if (c == ',' || c == '\n' || c == '"')
            throw std::invalid_argument("CsvWriter: field needs quoting, which is not supported");
    text_ += value;
    return *this;
}

CsvWriter& CsvWriter::blank_field() {
    separator();
    return *this;
}

void CsvWriter::end_row() {
    if (row_fields_ != columns_) throw std::logic_error("CsvWriter: row is missing fields");
    text_ += '\n';
    row_fields_ = 0;
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("CsvWriter: cannot open '" + path + "'");
    out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
    if (!out) throw std::runtime_error("CsvWriter: write to '" + path + "' failed");
}

}  // namespace hypercast
