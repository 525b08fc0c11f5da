#include "stabmod/cli/cli.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace stabmod::cli {

namespace {

constexpr char kMagic[8] = {'S', 'T', 'B', 'M', 'R', 'E', 'S', '\0'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class Writer
{
public:
    void u64(std::uint64_t v)
    {
        for (int i = 0; i < 8; ++i)
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void str(const std::string& s)
    {
        u64(s.size());
        buf_ += s;
    }
    void matrix(const BitMatrix& m)
    {
        u64(m.rows());
        u64(m.cols());
        std::uint8_t acc = 0;
        int used = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                acc |= static_cast<std::uint8_t>(m.get(r, c)) << used;
                if (++used == 8) {
                    buf_.push_back(static_cast<char>(acc));
                    acc = 0;
                    used = 0;
                }
            }
        if (used)
            buf_.push_back(static_cast<char>(acc));
    }
    const std::string& bytes() const { return buf_; }

private:
    std::string buf_;
};

/// Throws std::out_of_range on truncation.
class Reader
{
public:
    explicit Reader(const std::string& b) : b_(b) {}
    std::uint64_t u64()
    {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b_[pos_ + static_cast<std::size_t>(i)])) << (8 * i);
        pos_ += 8;
        return v;
    }
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    std::string str()
    {
        const auto n = u64();
        need(n);
        auto s = b_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    BitMatrix matrix()
    {
        const auto rows = u64(), cols = u64();
        if (rows > (1u << 24) || cols > (1u << 24))
            throw std::out_of_range("matrix too large");
        const std::size_t bits = rows * cols;
        need((bits + 7) / 8);
        BitMatrix m(rows, cols);
        std::size_t k = 0;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c, ++k)
                if ((static_cast<unsigned char>(b_[pos_ + k / 8]) >> (k % 8)) & 1)
                    m.set(r, c, true);
        pos_ += (bits + 7) / 8;
        return m;
    }
    bool done() const { return pos_ == b_.size(); }

private:
    void need(std::size_t n) const
    {
        if (pos_ + n > b_.size())
            throw std::out_of_range("truncated cache entry");
    }
    const std::string& b_;
    std::size_t pos_ = 0;
};

std::string hex(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return s;
}

std::string algebra_fingerprint(const hopf::HopfAlgebra& h)
{
    std::ostringstream out;
    out << h.name << "|";
    for (int i = 0; i < h.dim(); ++i)
        out << h.basis_names[static_cast<std::size_t>(i)] << ":" << h.degrees[static_cast<std::size_t>(i)] << ";";
    for (const auto& row : h.mult)
        for (auto e : row)
            out << e << ",";
    return out.str();
}

} // namespace

std::string resolution_key(const AModule& m, int s_min, int s_max)
{
    const std::string content = algebra_fingerprint(*m.alg) + "|" + dump_module(m, "m") + "|" + std::to_string(s_min) + "," + std::to_string(s_max);
    return hex(fnv1a(content));
}

std::string serialize_resolution(const stable::CompleteResolution& r)
{
    Writer p;
    p.str(resolution_key(*r.module, r.s_min, r.s_max));
    p.i64(r.s_min);
    p.i64(r.s_max);
    p.u64(r.generators.size());
    for (const auto& [s, degs] : r.generators) {
        p.i64(s);
        p.u64(degs.size());
        for (int d : degs)
            p.i64(d);
    }
    p.u64(r.differential.size());
    for (const auto& [s, d] : r.differential) {
        p.i64(s);
        p.matrix(d);
    }
    p.matrix(r.augmentation);
    p.matrix(r.coaugmentation);

    Writer out;
    std::string head(kMagic, sizeof kMagic);
    out.u64(kVersion);
    out.u64(fnv1a(p.bytes()));
    out.u64(p.bytes().size());
    return head + out.bytes() + p.bytes();
}

std::optional<stable::CompleteResolution> deserialize_resolution(const std::string& bytes, const AModule& m)
{
    if (bytes.size() < sizeof kMagic + 24 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
        return std::nullopt;
    try {
        const std::string rest = bytes.substr(sizeof kMagic);
        Reader h(rest);
        if (h.u64() != kVersion)
            return std::nullopt;
        const auto sum = h.u64();
        const auto len = h.u64();
        const std::string payload = rest.substr(24);
        if (payload.size() != len || fnv1a(payload) != sum)
            return std::nullopt;
        Reader p(payload);
        stable::CompleteResolution r;
        r.module = gmod::share(m);
        const auto key = p.str();
        r.s_min = static_cast<int>(p.i64());
        r.s_max = static_cast<int>(p.i64());
        if (key != resolution_key(m, r.s_min, r.s_max))
            return std::nullopt;
        for (auto n = p.u64(); n > 0; --n) {
            const int s = static_cast<int>(p.i64());
            auto& degs = r.generators[s];
            for (auto k = p.u64(); k > 0; --k)
                degs.push_back(static_cast<int>(p.i64()));
        }
        for (auto n = p.u64(); n > 0; --n) {
            const int s = static_cast<int>(p.i64());
            r.differential[s] = p.matrix();
        }
        r.augmentation = p.matrix();
        r.coaugmentation = p.matrix();
        if (!p.done())
            return std::nullopt;
        // Shape checks before the algebraic ones, which index by generator counts.
        const auto da = static_cast<std::size_t>(m.alg->dim());
        for (int s = r.s_min; s <= r.s_max; ++s)
            if (!r.generators.count(s))
                return std::nullopt;
        for (const auto& [s, d] : r.differential)
            if (!r.generators.count(s - 1) || d.rows() != r.generators.at(s - 1).size() * da || d.cols() != r.generators.at(s).size() * da)
                return std::nullopt;
        if (r.generators.count(0) && (r.augmentation.rows() != static_cast<std::size_t>(m.dim()) ||
                                      r.augmentation.cols() != r.generators.at(0).size() * da))
            return std::nullopt;
        if (r.generators.count(-1) && (r.coaugmentation.cols() != static_cast<std::size_t>(m.dim()) ||
                                       r.coaugmentation.rows() != r.generators.at(-1).size() * da))
            return std::nullopt;
        if (!stable::check_resolution(r).empty())
            return std::nullopt;
        return r;
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const auto tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError(path + ": cannot write");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw InputError(path + ": write failed");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError(path + ": cannot publish (" + ec.message() + ")");
    }
}

stable::CompleteResolution cached_resolution(const AModule& m, int s_min, int s_max, const std::string& cache_dir)
{
    namespace fs = std::filesystem;
    if (cache_dir.empty())
        return stable::complete_resolution(m, s_min, s_max);
    const auto path = (fs::path(cache_dir) / (resolution_key(m, s_min, s_max) + ".res")).string();
    if (fs::is_regular_file(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        if (auto r = deserialize_resolution(ss.str(), m))
            return *r;
    }
    auto r = stable::complete_resolution(m, s_min, s_max);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (ec)
        throw InputError(cache_dir + ": cache directory is not writable");
    write_atomic(path, serialize_resolution(r));
    return r;
}

} // namespace stabmod::cli
