from pydantic_settings import BaseSettings, SettingsConfigDict

SCHEMA_VERSION = "sharptree/1"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="SHARPTREE_", env_file=".env", extra="ignore")

    matching_cap: int = 1_000_000
    isomorphism_max_order: int = 12
    signature_search_max_order: int = 24
    spectral_tol: float = 1e-9
    # eigenvalues below zero_cutoff * max-norm count as zero
    zero_cutoff: float = 1e-10
    strict_checks: bool = False
    log_dir: str = "logs"
    log_level: str = "INFO"


settings = Settings()
