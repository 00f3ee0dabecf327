from exactwave.cli.config import SceneConfig, SCENE_SCHEMA
from exactwave.cli.main import main
