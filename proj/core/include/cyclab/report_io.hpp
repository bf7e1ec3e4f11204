#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cyclab {

// Fixed 17-significant-digit formatting for every floating-point value that
// reaches a CSV body, so reruns are byte-identical.
std::string format_g17(double v);

std::string csv_join(const std::vector<std::string>& cells);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);

// Ordered command provenance record. Serialization is deterministic and
// parse(serialize()) round-trips bit-identically.
class RunManifest {
  public:
    explicit RunManifest(std::string command);
    RunManifest(const RunManifest&);
    RunManifest& operator=(const RunManifest&);
    RunManifest(RunManifest&&) noexcept;
    RunManifest& operator=(RunManifest&&) noexcept;
    ~RunManifest();

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value);
    void set(const std::string& key, double value);
    void set(const std::string& key, long long value);
    void set(const std::string& key, std::size_t value);
    void set(const std::string& key, bool value);

    std::string command() const;
    std::string serialize() const;  // pretty JSON, insertion order preserved
    static RunManifest parse(const std::string& text);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cyclab
