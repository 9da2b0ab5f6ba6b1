SCHEMA_VERSION = 1
DEFAULT_FORMAT = 'json'
FORMATS = ('json', 'csv', 'pretty')
COMMANDS = ('decompose', 'cellbasis', 'simples', 'reproduce', 'linkage', 'a2', 'tl')
TL_ACTIONS = ('compose', 'jw', 'gl-basis', 'pullback')
CACHE_DB = 'tilting.db'
CACHE_TABLE = 'tilting_models'
EVENTS_RETENTION_SIZE = 8 * 1024 * 1024
LINKAGE_BOUND = 20
# cap: V⊗V -> K and cup: K -> V⊗V as {(a, b): (coeff, power of v)}
CAP = {(0, 1): (1, -1), (1, 0): (-1, 0)}
CUP = {(0, 1): (1, 0), (1, 0): (-1, 1)}
A2_LEVEL = 3
