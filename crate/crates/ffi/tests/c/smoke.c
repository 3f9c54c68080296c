#include <stdio.h>
#include <string.h>

#include "qconcat.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  QcCode *five = NULL;
  QcConcat *cc = NULL;
  QcParams params;
  QcSimStats stats;
  bool ok = false;
  char msg[256];

  CHECK(qc_code_five_qubit(&five) == QC_STATUS_OK);
  CHECK(qc_concat_new(five, five, &cc) == QC_STATUS_OK);
  CHECK(qc_concat_params(cc, &params) == QC_STATUS_OK);
  CHECK(params.n == 25 && params.k == 1 && params.d_lower == 9);

  CHECK(qc_concat_decode_pauli(cc, "XIIIIIIIIIIIZIIIIIIIIIIIY", &ok) == QC_STATUS_OK);
  CHECK(ok);

  CHECK(qc_concat_simulate(cc, 0.0, 1000, 7, 2, &stats) == QC_STATUS_OK);
  CHECK(stats.trials == 1000 && stats.failures == 0);

  CHECK(qc_concat_decode_pauli(cc, "XX", &ok) == QC_STATUS_INVALID_ARGUMENT);
  CHECK(qc_last_error_length() > 1);
  CHECK(qc_last_error_message(msg, sizeof msg) == QC_STATUS_OK);
  CHECK(strstr(msg, "length") != NULL);
  CHECK(qc_last_error_message(msg, 2) == QC_STATUS_BUFFER_TOO_SMALL);

  CHECK(qc_code_qrs(3, 4, NULL) == QC_STATUS_NULL_POINTER);

  qc_concat_free(cc);
  qc_code_free(five);
  printf("ok %s\n", qc_version());
  return 0;
}
