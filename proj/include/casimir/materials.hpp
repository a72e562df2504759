#ifndef CASIMIR_MATERIALS_HPP
#define CASIMIR_MATERIALS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

enum class DielectricModel { plasma, drude, tabulated };

std::string to_string(DielectricModel m);
DielectricModel model_from_string(const std::string& s);

/// One (xi, eps) sample of a tabulated permittivity along the imaginary axis.
struct TablePoint {
    double xi;   // rad/s
    double eps;  // dimensionless, > 1
};

/// A metal with its dielectric response at imaginary frequency.
/// Frequencies are stored in rad/s; the database file quotes them in eV/meV
/// and they are converted on load.
struct MaterialRecord {
    std::string name;
    DielectricModel model = DielectricModel::plasma;
    double plasma_frequency = 0.0;      // omega_p, rad/s (plasma/drude; optional for tabulated)
    double relaxation_frequency = 0.0;  // nu, rad/s (drude only)
    std::vector<TablePoint> table;      // tabulated only; strictly increasing in xi

    /// Copy of this record evaluated under a different model (e.g. the same
    /// omega_p, nu pair interpreted as plasma instead of drude).
    MaterialRecord with_model(DielectricModel m) const;

    /// Throws ValidationError naming the record and offending field.
    void validate() const;
};

/// eV -> rad/s via E * e / hbar. Rejects negative input.
double ev_to_angular_frequency(double energy_ev);

/// Permittivity eps(i xi) for xi > 0. The xi -> 0 limit is never evaluated
/// here; the zero-frequency Matsubara term is handled analytically upstream.
/// Tabulated records interpolate linearly in (log xi, log(eps-1)) and clamp
/// to the endpoint values outside the table.
double permittivity_iw(const MaterialRecord& mat, double xi);

/// Parse a material database (grammar documented in README). Throws
/// MaterialParseError with the source line on grammar errors and
/// MaterialDbError on validation failures or duplicate names.
std::vector<MaterialRecord> parse_material_db(std::istream& in, const std::string& origin);
std::vector<MaterialRecord> load_material_db(const std::string& path);

/// Built-in database: Au (omega_p = 9.0 eV, nu = 35 meV).
const std::vector<MaterialRecord>& default_materials();

/// Lookup by name; throws MaterialDbError when absent.
const MaterialRecord& find_material(const std::vector<MaterialRecord>& db,
                                    const std::string& name);

}  // namespace casimir

#endif
