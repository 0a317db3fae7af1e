from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Logging
    DEBUG: bool = Field(False, description="Log at DEBUG instead of INFO")
    LOG_JSON: bool = Field(True, description="Emit JSON log lines")

    # Self-test defaults (overridable by CLI flags)
    SELFTEST_CASES: int = Field(50, ge=0)
    SELFTEST_MAX_DIM: int = Field(4, ge=0)
    SELFTEST_SEED: int = Field(1, ge=0)

    # Sampling oracles
    SAMPLES_PER_INSTANCE: int = Field(50, ge=0)
    SOLUTION_MEMBERS: int = Field(10, ge=0)

    # HTTP surface
    API_HOST: str = Field("127.0.0.1")
    API_PORT: int = Field(8000)

    model_config = {
        "env_file": ".env",
        "env_prefix": "QUATRANK_",
        "case_sensitive": True,
        "extra": "ignore",
    }


settings = Settings()
