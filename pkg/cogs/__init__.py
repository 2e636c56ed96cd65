from pkgutil import iter_modules

EXTENSIONS = sorted(
    module.name
    for module in iter_modules(__path__, f"{__package__}.")
    if not module.name.split(".")[-1].startswith("_")
)
