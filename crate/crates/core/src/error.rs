use thiserror::Error;

use crate::bottsam::BottSamelsonError;
use crate::cartan::CartanError;
use crate::charformula::CharFormulaError;
use crate::chevalley::ChevalleyError;
use crate::isogeny::IsogenyError;
use crate::rootdata::RootDatumError;
use crate::roots::RootError;
use crate::weyl::WeylError;

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    BottSamelson(#[from] BottSamelsonError),
    #[error(transparent)]
    CharFormula(#[from] CharFormulaError),
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
    #[error(transparent)]
    Isogeny(#[from] IsogenyError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
}

impl Error {
    /// Name of the underlying variant, such as `AsymmetricZero`.
    pub fn kind(&self) -> String {
        let debug = match self {
            Error::Cartan(e) => format!("{e:?}"),
            Error::Root(e) => format!("{e:?}"),
            Error::Weyl(e) => format!("{e:?}"),
            Error::BottSamelson(e) => format!("{e:?}"),
            Error::CharFormula(e) => format!("{e:?}"),
            Error::RootDatum(e) => format!("{e:?}"),
            Error::Isogeny(e) => format!("{e:?}"),
            Error::Chevalley(e) => format!("{e:?}"),
        };
        debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
    }
}
