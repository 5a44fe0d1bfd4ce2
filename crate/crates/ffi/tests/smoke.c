#include <stdio.h>
#include "fibrook.h"
int main(void) {
  FibrookTriangle *t = NULL; FibrookPoly *e = NULL; char *s = NULL;
  if (fibrook_triangle_build("Sf", 5, &t) != FIBROOK_STATUS_OK) return 1;
  if (fibrook_triangle_entry(t, 5, 1, &e) != FIBROOK_STATUS_OK) return 2;
  fibrook_poly_to_string(e, &s); printf("%s\n", s);
  fibrook_string_free(s); fibrook_poly_free(e); fibrook_triangle_free(t);
  return 0;
}
