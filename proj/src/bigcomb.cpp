#include "fdlat/bigcomb.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numeric>

namespace fdlat {

Natural binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kSharedBinomialMax) return shared_binomials()(n, k);
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(std::min(k, n - k)));
  return out;
}

Natural fsp(std::int64_t n) {
  if (n < 0) throw ConstraintError("fsp: n must be nonnegative");
  return binom(n, n / 2);
}

Natural factorial(std::int64_t n) {
  if (n < 0) throw ConstraintError("factorial: n must be nonnegative");
  if (n <= kSharedFactorialMax) return shared_factorials()[n];
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Natural multinomial(std::int64_t i, std::span<const std::int64_t> parts) {
  if (i < 0) throw ConstraintError("multinomial: i must be nonnegative");
  std::int64_t sum = 0;
  for (auto part : parts) {
    if (part < 0) throw ConstraintError("multinomial: negative part");
    sum += part;
  }
  if (sum != i) throw ConstraintError("multinomial: parts do not sum to i");

  // Product of binomials C(v0+..+vj, vj); every factor stays exact.
  Natural out = 1;
  std::int64_t running = 0;
  for (auto part : parts) {
    running += part;
    out *= binom(running, part);
  }
  return out;
}

Natural pow10(unsigned exponent) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

Natural parse_natural(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ConstraintError("not a decimal natural number: '" + text + "'");
  return Natural(text, 10);
}

// ---------------------------------------------------------------------------

FactorialTable::FactorialTable(std::int64_t n_max) {
  if (n_max < 0) throw ConstraintError("FactorialTable: n_max must be nonnegative");
  table_.resize(static_cast<std::size_t>(n_max) + 1);
  table_[0] = 1;
  for (std::int64_t i = 1; i <= n_max; ++i) {
    mpz_mul_ui(table_[i].get_mpz_t(), table_[i - 1].get_mpz_t(), static_cast<unsigned long>(i));
  }
}

const Natural& FactorialTable::operator[](std::int64_t i) const {
  if (i < 0 || i > n_max()) throw ConstraintError("FactorialTable: index out of range");
  return table_[static_cast<std::size_t>(i)];
}

namespace {

constexpr std::array<char, 8> kCacheMagic = {'F', 'D', 'L', 'A', 'T', 'F', 'A', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("factorial cache: truncated file");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

void FactorialTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("factorial cache: cannot write " + file.string());
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_le<std::uint32_t>(out, kCacheVersion);
  put_le<std::uint64_t>(out, static_cast<std::uint64_t>(n_max()));
  std::vector<std::uint64_t> limbs;
  for (const auto& value : table_) {
    std::size_t count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 63) / 64;
    limbs.assign(count, 0);
    std::size_t written = 0;
    mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, value.get_mpz_t());
    put_le<std::uint64_t>(out, written);
    for (std::size_t i = 0; i < written; ++i) put_le<std::uint64_t>(out, limbs[i]);
  }
  if (!out) throw std::runtime_error("factorial cache: write failed for " + file.string());
}

FactorialTable FactorialTable::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("factorial cache: cannot open " + file.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kCacheMagic) throw std::runtime_error("factorial cache: bad magic");
  if (get_le<std::uint32_t>(in) != kCacheVersion) throw std::runtime_error("factorial cache: unknown version");
  auto n_max = get_le<std::uint64_t>(in);
  if (n_max > (1u << 24)) throw std::runtime_error("factorial cache: implausible n_max");

  std::vector<Natural> table(n_max + 1);
  std::vector<std::uint64_t> limbs;
  for (auto& value : table) {
    auto count = get_le<std::uint64_t>(in);
    if (count > (1u << 24)) throw std::runtime_error("factorial cache: implausible limb count");
    limbs.resize(count);
    for (auto& limb : limbs) limb = get_le<std::uint64_t>(in);
    mpz_import(value.get_mpz_t(), count, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  }
  // Cheap consistency check: the recurrence must hold everywhere.
  if (table[0] != 1) throw std::runtime_error("factorial cache: table[0] != 1");
  Natural expect;
  for (std::size_t i = 1; i < table.size(); ++i) {
    mpz_mul_ui(expect.get_mpz_t(), table[i - 1].get_mpz_t(), static_cast<unsigned long>(i));
    if (expect != table[i]) throw std::runtime_error("factorial cache: recurrence violated");
  }
  return FactorialTable(std::move(table));
}

const FactorialTable& shared_factorials() {
  static const FactorialTable table = [] {
    const char* dir = std::getenv("FDLAT_FACT_CACHE");
    if (dir == nullptr || *dir == '\0') return FactorialTable(kSharedFactorialMax);
    auto file = std::filesystem::path(dir) / ("factorials-" + std::to_string(kSharedFactorialMax) + ".bin");
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
      try {
        auto loaded = FactorialTable::load(file);
        if (loaded.n_max() == kSharedFactorialMax) return loaded;
      } catch (const std::runtime_error&) {
        // fall through and rebuild
      }
    }
    FactorialTable built(kSharedFactorialMax);
    try {
      std::filesystem::create_directories(dir, ec);
      built.save(file);
    } catch (const std::runtime_error&) {
      // an unwritable cache directory only costs the rebuild next time
    }
    return built;
  }();
  return table;
}

// ---------------------------------------------------------------------------

BinomialTable::BinomialTable(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 0) throw ConstraintError("BinomialTable: n_max must be nonnegative");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto& row = rows_[n];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::int64_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const Natural& BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (n > n_max_) throw ConstraintError("BinomialTable: n exceeds table size");
  if (n < 0 || k < 0 || k > n) return zero_;
  return rows_[n][k];
}

const BinomialTable& shared_binomials() {
  static const BinomialTable table(kSharedBinomialMax);
  return table;
}

}  // namespace fdlat
