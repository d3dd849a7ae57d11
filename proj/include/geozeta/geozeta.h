#ifndef GEOZETA_GEOZETA_H
#define GEOZETA_GEOZETA_H

#include <stddef.h>

#if defined(GEOZETA_BUILDING_LIBRARY)
#define GZ_API __attribute__((visibility("default")))
#else
#define GZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; gz_last_error() holds the message of
   the most recent failure on the calling thread. */
typedef enum gz_status {
  GZ_OK = 0,
  GZ_ERR_PARSE = 1,
  GZ_ERR_VALIDATION = 2,
  GZ_ERR_DOMAIN = 3,
  GZ_ERR_MISSING_ETA = 4,
  GZ_ERR_STRIP = 5,
  GZ_ERR_ARGUMENT = 6,
  GZ_ERR_INTERNAL = 7
} gz_status;

typedef struct gz_spectrum gz_spectrum;
typedef struct gz_invariants gz_invariants;

typedef enum gz_kind {
  GZ_RUELLE_SIGMA = 0,
  GZ_SELBERG_SIGMA = 1,
  GZ_RUELLE_RHO = 2,
  GZ_SELBERG_RHO = 3,
  GZ_ZOGRAF_F = 4,
  GZ_ZOGRAF_G = 5,
  GZ_SELBERG_CONTINUED = 6, /* Z(σ_k, s) with one reflection; needs invariants */
  GZ_RUELLE_RHO_CONTINUED = 7
} gz_kind;

typedef enum gz_parity { GZ_EVEN = 0, GZ_ODD = 1 } gz_parity;

typedef struct gz_options {
  double l_cut;         /* <= 0 selects the spectrum's l_max */
  int allow_incomplete; /* permit l_cut > l_max */
  int jobs;             /* worker threads for grid evaluation, >= 1 */
  double tol;           /* verification tolerance */
} gz_options;

typedef struct gz_value {
  double re;
  double im;
  double abs_error_bound; /* +inf outside the convergence half-plane */
  int in_convergence_domain;
  int heuristic_bound;
  int reflected;
} gz_value;

typedef struct gz_verify_request {
  const char* identity; /* e.g. "four-selberg", "main-theorem" or "all" */
  int m;
  int k;
  int n;
  gz_parity parity;
  const double* grid_re; /* optional custom grid, NULL for the default */
  const double* grid_im;
  size_t grid_count;
  int has_observed_ratio4; /* main-theorem: torsion-side (T0/T)^4 */
  double observed_re;
  double observed_im;
  int has_det_volume; /* det-chain: determinant-side volume */
  double det_volume;
} gz_verify_request;

GZ_API const char* gz_version(void);
GZ_API const char* gz_last_error(void);
GZ_API void gz_string_free(char* s);
GZ_API void gz_options_init(gz_options* opts);

GZ_API gz_status gz_spectrum_from_json(const char* text, gz_spectrum** out);
GZ_API gz_status gz_spectrum_from_csv(const char* text, double l_max, int oriented,
                                      const char* label, gz_spectrum** out);
GZ_API void gz_spectrum_free(gz_spectrum* spec);
GZ_API size_t gz_spectrum_size(const gz_spectrum* spec);
GZ_API double gz_spectrum_l_max(const gz_spectrum* spec);
GZ_API gz_status gz_spectrum_to_json(const gz_spectrum* spec, char** out);

GZ_API gz_status gz_invariants_from_json(const char* text, gz_invariants** out);
GZ_API void gz_invariants_free(gz_invariants* inv);
GZ_API gz_status gz_invariants_eta(const gz_invariants* inv, int k, double* out);

/* index is k for the σ kinds, m for the ρ kinds, n for F/G; k is the twist of
   GZ_SELBERG_RHO. inv may be NULL unless the kind is a continued one. */
GZ_API gz_status gz_eval(const gz_spectrum* spec, const gz_invariants* inv, gz_kind kind,
                         int index, int k, double s_re, double s_im, const gz_options* opts,
                         gz_value* out);
/* JSON array of {"s","value","abs_error_bound","in_convergence_domain","flags"}. */
GZ_API gz_status gz_eval_grid_json(const gz_spectrum* spec, const gz_invariants* inv,
                                   gz_kind kind, int index, int k, const double* s_re,
                                   const double* s_im, size_t count, const gz_options* opts,
                                   char** out);

/* Writes the report JSON; *passed is 1 when every check passed. */
GZ_API gz_status gz_verify(const gz_spectrum* spec, const gz_invariants* inv,
                           const gz_verify_request* req, const gz_options* opts, int* passed,
                           char** report_json);

GZ_API gz_status gz_predict_torsion(const gz_spectrum* spec, const gz_invariants* inv, int n,
                                    gz_parity parity, const gz_options* opts, char** json);
/* which: 0 for the F_1 case, 1 for the G_0 case. */
GZ_API gz_status gz_special_case(const gz_invariants* inv, int which, double* re, double* im);

GZ_API gz_status gz_heat_trace_json(const gz_spectrum* spec, const gz_invariants* inv, int m,
                                    int p, const double* t, size_t count, const gz_options* opts,
                                    char** json);
/* t may be NULL (count 0) for the default grid. */
GZ_API gz_status gz_small_time_fit(const gz_spectrum* spec, const gz_invariants* inv, int m,
                                   int p, const double* t, size_t count, const gz_options* opts,
                                   double* a1, double* a2, char** json);

#ifdef __cplusplus
}
#endif

#endif
