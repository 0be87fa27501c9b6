import jsonschema
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT202012

from hyperarrow.schemas import SHARED

REGISTRY = Registry().with_resources(
    (s["$id"], Resource.from_contents(s, default_specification=DRAFT202012)) for s in SHARED
)


def validator(schema):
    return jsonschema.Draft202012Validator(schema, registry=REGISTRY)
