#include "cyclab/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cyclab {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct RunManifest::Impl {
    nlohmann::ordered_json doc;
};

RunManifest::RunManifest(std::string command) : impl_(std::make_unique<Impl>()) {
    impl_->doc["tool"] = "cyclab";
    impl_->doc["version"] = kToolVersion;
    impl_->doc["command"] = std::move(command);
}

RunManifest::RunManifest(const RunManifest& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}
RunManifest& RunManifest::operator=(const RunManifest& other) {
    if (this != &other) *impl_ = *other.impl_;
    return *this;
}
RunManifest::RunManifest(RunManifest&&) noexcept = default;
RunManifest& RunManifest::operator=(RunManifest&&) noexcept = default;
RunManifest::~RunManifest() = default;

void RunManifest::set(const std::string& key, const std::string& value) { impl_->doc[key] = value; }
void RunManifest::set(const std::string& key, const char* value) { impl_->doc[key] = value; }
void RunManifest::set(const std::string& key, double value) {
    // store as the same fixed-format string used in CSV bodies: manifests must
    // rerun byte-identically and JSON double printing is library-dependent
    impl_->doc[key] = format_g17(value);
}
void RunManifest::set(const std::string& key, long long value) { impl_->doc[key] = value; }
void RunManifest::set(const std::string& key, std::size_t value) {
    impl_->doc[key] = static_cast<std::uint64_t>(value);
}
void RunManifest::set(const std::string& key, bool value) { impl_->doc[key] = value; }

std::string RunManifest::command() const {
    return impl_->doc.value("command", std::string{});
}

std::string RunManifest::serialize() const { return impl_->doc.dump(2) + "\n"; }

RunManifest RunManifest::parse(const std::string& text) {
    RunManifest m{""};
    m.impl_->doc = nlohmann::ordered_json::parse(text);
    return m;
}

}  // namespace cyclab
