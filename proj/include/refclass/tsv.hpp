#pragma once

#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "refclass/common.hpp"

namespace refclass::detail {

// Buffered line reader over stdio. Keeps ingest off the iostream hot path;
// reference files run to tens of millions of rows.
class LineReader {
public:
    explicit LineReader(const std::string& path) : path_(path), file_(std::fopen(path.c_str(), "rb")) {
        if (!file_) throw IoError("cannot open file: " + path);
        buf_.resize(1 << 20);
    }

    ~LineReader() {
        if (file_) std::fclose(file_);
    }

    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    // Returns false at EOF. The returned view is valid until the next call.
    // Strips trailing \n and \r.
    bool next(std::string_view& line) {
        line_.clear();
        while (true) {
            if (pos_ == len_) {
                len_ = std::fread(buf_.data(), 1, buf_.size(), file_);
                pos_ = 0;
                if (len_ == 0) {
                    if (std::ferror(file_)) throw IoError("read error: " + path_);
                    if (line_.empty() && !partial_) return false;
                    partial_ = false;
                    line = strip_cr(line_);
                    ++line_no_;
                    return true;
                }
            }
            const char* start = buf_.data() + pos_;
            const char* nl = static_cast<const char*>(memchr(start, '\n', len_ - pos_));
            if (nl) {
                size_t n = static_cast<size_t>(nl - start);
                if (line_.empty() && !partial_) {
                    pos_ += n + 1;
                    partial_ = false;
                    line = strip_cr(std::string_view(start, n));
                    ++line_no_;
                    return true;
                }
                line_.append(start, n);
                pos_ += n + 1;
                partial_ = false;
                line = strip_cr(line_);
                ++line_no_;
                return true;
            }
            line_.append(start, len_ - pos_);
            pos_ = len_;
            partial_ = true;
        }
    }

    size_t line_number() const { return line_no_; }
    const std::string& path() const { return path_; }

private:
    static std::string_view strip_cr(std::string_view s) {
        if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
        return s;
    }

    std::string path_;
    std::FILE* file_ = nullptr;
    std::string buf_;
    std::string line_;
    size_t pos_ = 0;
    size_t len_ = 0;
    size_t line_no_ = 0;
    bool partial_ = false;
};

// Buffered writer. Call close() to surface flush/close failures; the
// destructor only cleans up.
class FileWriter {
public:
    explicit FileWriter(const std::string& path) : path_(path), file_(std::fopen(path.c_str(), "wb")) {
        if (!file_) throw IoError("cannot open file for writing: " + path);
        buf_.reserve(1 << 20);
    }

    ~FileWriter() {
        if (file_) {
            try {
                flush();
            } catch (...) {
            }
            std::fclose(file_);
            file_ = nullptr;
        }
    }

    void close() {
        if (!file_) return;
        flush();
        int rc = std::fclose(file_);
        file_ = nullptr;
        if (rc != 0) throw IoError("close failed: " + path_);
    }

    FileWriter(const FileWriter&) = delete;
    FileWriter& operator=(const FileWriter&) = delete;

    void write(std::string_view s) {
        buf_.append(s);
        if (buf_.size() >= (1 << 20)) flush();
    }

    void write_u64(uint64_t v) {
        char tmp[24];
        int n = std::snprintf(tmp, sizeof tmp, "%llu", static_cast<unsigned long long>(v));
        buf_.append(tmp, static_cast<size_t>(n));
        if (buf_.size() >= (1 << 20)) flush();
    }

    void flush() {
        if (!buf_.empty()) {
            if (std::fwrite(buf_.data(), 1, buf_.size(), file_) != buf_.size())
                throw IoError("write failed: " + path_);
            buf_.clear();
        }
    }

private:
    std::string path_;
    std::FILE* file_;
    std::string buf_;
};

}  // namespace refclass::detail
