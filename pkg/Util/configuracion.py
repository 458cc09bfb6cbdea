"""
Configuración del motor: tolerancias y parámetros numéricos.
Todo se lee de variables de entorno con valores por defecto; ninguna es obligatoria.
"""

import os

# Logging
NIVEL_LOG = os.getenv("WARING_LOG_LEVEL", "WARNING").upper()

# Oráculo de raíces
TOL_CERO = float(os.getenv("WARING_ZERO_TOL", "1e-6"))
TOL_CLUSTER = float(os.getenv("WARING_CLUSTER_TOL", "1e-6"))
TOL_EMPAREJAMIENTO = float(os.getenv("WARING_TOL_EMPAREJAMIENTO", "1e-7"))
RESIDUO_RAICES = float(os.getenv("WARING_RESIDUO_RAICES", "1e-9"))
RESIDUO_UNIVARIADO = float(os.getenv("WARING_RESIDUO_UNIVARIADO", "1e-12"))
MAX_ITER_ABERTH = int(os.getenv("WARING_MAX_ITER_ABERTH", "500"))

# Verificación
TOL_RAICES = float(os.getenv("WARING_TOL_RAICES", "1e-8"))
TOL_CUADRATURA = float(os.getenv("WARING_TOL_CUADRATURA", "1e-6"))
TOL_SERIE_Z = float(os.getenv("WARING_TOL_SERIE_Z", "1e-9"))
NODOS_CUADRATURA = int(os.getenv("WARING_NODOS_CUADRATURA", "128"))
RADIO_MAXIMO = float(os.getenv("WARING_RADIO_MAXIMO", "0.25"))

# Reportes
DIGITOS_DECIMALES = int(os.getenv("WARING_DIGITOS_DECIMALES", "17"))
